#include "cosetlab/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cosetlab {

using nlohmann::json;

namespace {

std::string digits(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && w.field()->q() > 10) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string show(const Word& w, bool pretty) {
    if (!pretty) return digits(w);
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w.field()->pretty(w[i]);
    }
    return out + ")";
}

json words_json(const std::vector<Word>& ws, bool pretty) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(word_json(w, pretty));
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

CodeInfo describe_code(const LinearCode& code, const IdealRegistry& reg, const EnumerationCaps& caps) {
    CodeInfo info;
    info.n = code.n();
    info.k = code.k();
    info.q = code.q();
    info.p = code.field()->p();
    info.m = code.field()->m();
    info.d = min_distance(code, caps);
    info.t = error_capability(info.d);
    info.rho = reg.table().covering_radius();
    info.codewords = *checked_power(code.q(), code.k());
    return info;
}

json word_json(const Word& w, bool pretty) {
    json out = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (pretty)
            out.push_back(w.field()->pretty(w[i]));
        else
            out.push_back(w[i]);
    }
    return out;
}

std::string word_csv(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const Field& field, std::size_t n, std::string_view text) {
    std::vector<Element> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto piece = text.substr(pos, end - pos);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad word entry '" + std::string(piece) + "'");
        if (!field->contains(value))
            throw std::invalid_argument("entry " + std::to_string(value) + " is outside GF(" + std::to_string(field->q()) + ")");
        entries.push_back(value);
        pos = end + 1;
    }
    if (entries.size() != n)
        throw std::invalid_argument("word has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
    return Word(field, std::move(entries));
}

std::string render_info(const CodeInfo& info, const RenderOptions& opt) {
    switch (opt.format) {
        case Format::Json:
            return dump(json{{"n", info.n}, {"k", info.k}, {"q", info.q}, {"p", info.p}, {"m", info.m}, {"d", info.d},
                             {"t", info.t}, {"rho", info.rho}, {"codewords", info.codewords}});
        case Format::Csv: {
            std::ostringstream s;
            s << "n,k,q,p,m,d,t,rho,codewords\n"
              << info.n << ',' << info.k << ',' << info.q << ',' << info.p << ',' << info.m << ',' << info.d << ','
              << info.t << ',' << info.rho << ',' << info.codewords << '\n';
            return s.str();
        }
        case Format::Text: {
            std::ostringstream s;
            s << "[" << info.n << "," << info.k << "," << info.d << "] code over GF(" << info.q << ")\n"
              << "  p=" << info.p << " m=" << info.m << " t=" << info.t << " rho=" << info.rho
              << " codewords=" << info.codewords << '\n';
            return s.str();
        }
    }
    return {};
}

std::string render_coset_leaders(const IdealRegistry& reg, const RenderOptions& opt, bool audit) {
    const auto& table = reg.table();
    switch (opt.format) {
        case Format::Json: {
            json cosets = json::array();
            table.for_each([&](std::uint64_t s, const CosetRecord& rec) {
                cosets.push_back(json{{"syndrome", s},
                                      {"weight", rec.weight},
                                      {"leaders", words_json(rec.leaders, opt.pretty)},
                                      {"canonical", word_json(rec.canonical(), opt.pretty)}});
            });
            if (!audit) return dump(cosets);
            const auto& st = reg.stats();
            json members = json::array();
            for (const auto& w : reg.members()) {
                json m{{"word", word_json(w, opt.pretty)}};
                if (auto o = reg.origin(w); o && !w.is_zero())
                    m["origin"] = json{{"parent", word_json(unpack(w.field(), w.size(), o->parent), opt.pretty)},
                                       {"i", o->i + 1},
                                       {"j", o->j + 1},
                                       {"criterion", o->criterion}};
                members.push_back(std::move(m));
            }
            return dump(json{{"cosets", cosets},
                             {"members", members},
                             {"stats",
                              {{"words_processed", st.words_processed},
                               {"queue_peak", st.queue_peak},
                               {"criterion1_words", st.criterion1_words},
                               {"criterion2_words", st.criterion2_words},
                               {"overweight_members", st.overweight_members}}}});
        }
        case Format::Csv: {
            std::ostringstream s;
            s << "syndrome,weight,leader,canonical\n";
            table.for_each([&](std::uint64_t syn, const CosetRecord& rec) {
                for (const auto& v : rec.leaders)
                    s << syn << ',' << rec.weight << ',' << show(v, opt.pretty) << ',' << (v == rec.canonical()) << '\n';
            });
            return s.str();
        }
        case Format::Text: {
            std::ostringstream s;
            s << table.capacity() << " cosets, " << reg.members().size() << " ideal members\n";
            table.for_each([&](std::uint64_t syn, const CosetRecord& rec) {
                s << "  syndrome " << syn << "  weight " << rec.weight << " :";
                for (const auto& v : rec.leaders) s << ' ' << show(v, opt.pretty);
                s << '\n';
            });
            if (audit) {
                const auto& st = reg.stats();
                s << "processed " << st.words_processed << ", queue peak " << st.queue_peak << ", criterion 1 "
                  << st.criterion1_words << ", criterion 2 " << st.criterion2_words << ", overweight "
                  << st.overweight_members << '\n';
            }
            return s.str();
        }
    }
    return {};
}

std::string render_leaders(const CodeInfo& info, const LeaderSet& leaders, bool test_set, const RenderOptions& opt) {
    switch (opt.format) {
        case Format::Json: {
            json out{{"code_params", {{"n", info.n}, {"k", info.k}, {"q", info.q}}},
                     {"rho", info.rho},
                     {"leader_codewords", words_json(leaders.words, opt.pretty)},
                     {"max_weight", leaders.max_weight()},
                     {"bound_2rho_plus_1", 2 * info.rho + 1},
                     {"is_test_set", test_set}};
            if (!leaders.provenance.empty()) {
                json prov = json::array();
                for (const auto& triples : leaders.provenance) {
                    json list = json::array();
                    for (const auto& t : triples)
                        list.push_back(json{{"v1", word_json(t.v1, opt.pretty)},
                                            {"i", t.i + 1},
                                            {"j", t.j + 1},
                                            {"v2", word_json(t.v2, opt.pretty)}});
                    prov.push_back(std::move(list));
                }
                out["provenance"] = std::move(prov);
            }
            return dump(out);
        }
        case Format::Csv: {
            std::ostringstream s;
            s << "codeword,weight\n";
            for (const auto& c : leaders.words) s << show(c, opt.pretty) << ',' << c.weight() << '\n';
            return s.str();
        }
        case Format::Text: {
            std::ostringstream s;
            s << leaders.size() << " leader codewords, max weight " << leaders.max_weight() << " (bound "
              << 2 * info.rho + 1 << "), test set: " << yes_no(test_set) << '\n';
            for (const auto& c : leaders.words) s << "  " << show(c, opt.pretty) << '\n';
            return s.str();
        }
    }
    return {};
}

std::string render_errors(const ErrorClassification& cls, const std::vector<Word>& trial, const TrialSetReport& checks,
                          const RenderOptions& opt) {
    switch (opt.format) {
        case Format::Json:
            return dump(json{{"E0_size", cls.e0_size()},
                             {"E1_size", cls.e1_size()},
                             {"M1", words_json(cls.m1, opt.pretty)},
                             {"M0_size", cls.m0.size()},
                             {"trial_set", words_json(trial, opt.pretty)},
                             {"checks",
                              {{"definition", checks.definition},
                               {"prop2", checks.covers_h},
                               {"prop3", checks.covers_larger_halves}}}});
        case Format::Csv: {
            std::ostringstream s;
            s << "set,word\n";
            for (const auto& y : cls.m1) s << "M1," << show(y, opt.pretty) << '\n';
            for (const auto& c : trial) s << "T," << show(c, opt.pretty) << '\n';
            return s.str();
        }
        case Format::Text: {
            std::ostringstream s;
            s << "E0 " << cls.e0_size() << ", E1 " << cls.e1_size() << ", M1 " << cls.m1.size() << ", M0 "
              << cls.m0.size() << '\n';
            s << "M1:";
            for (const auto& y : cls.m1) s << ' ' << show(y, opt.pretty);
            s << "\ntrial set:";
            for (const auto& c : trial) s << ' ' << show(c, opt.pretty);
            s << "\ndefinition " << yes_no(checks.definition) << ", H(y) cover " << yes_no(checks.covers_h)
              << ", larger-half cover " << yes_no(checks.covers_larger_halves) << '\n';
            return s.str();
        }
    }
    return {};
}

std::string render_decode(const DecodeResult& result, const RenderOptions& opt) {
    switch (opt.format) {
        case Format::Json:
            return dump(json{{"error", word_json(result.error, opt.pretty)},
                             {"codeword", word_json(result.codeword, opt.pretty)},
                             {"steps", result.steps}});
        case Format::Csv:
            return "error,codeword,steps\n" + show(result.error, opt.pretty) + ',' + show(result.codeword, opt.pretty) +
                   ',' + std::to_string(result.steps) + '\n';
        case Format::Text:
            return "error " + show(result.error, opt.pretty) + "  codeword " + show(result.codeword, opt.pretty) +
                   "  steps " + std::to_string(result.steps) + '\n';
    }
    return {};
}

std::string render_verify(const VerificationReport& report, const RenderOptions& opt) {
    const auto status = [](const CheckResult& c) { return c.informational ? "info" : c.passed ? "pass" : "FAIL"; };
    switch (opt.format) {
        case Format::Json: {
            json checks = json::array();
            for (const auto& c : report.checks)
                checks.push_back(json{{"name", c.name}, {"status", status(c)}, {"cases", c.cases}, {"detail", c.detail}});
            return dump(json{{"passed", report.all_passed()}, {"checks", checks}});
        }
        case Format::Csv: {
            std::ostringstream s;
            s << "check,status,cases,detail\n";
            for (const auto& c : report.checks) {
                std::string detail = c.detail;
                for (auto& ch : detail)
                    if (ch == ',') ch = ';';
                s << c.name << ',' << status(c) << ',' << c.cases << ',' << detail << '\n';
            }
            return s.str();
        }
        case Format::Text: {
            std::ostringstream s;
            std::size_t width = 0;
            for (const auto& c : report.checks) width = std::max(width, c.name.size());
            for (const auto& c : report.checks) {
                s << status(c) << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << c.cases;
                if (!c.detail.empty()) s << "  " << c.detail;
                s << '\n';
            }
            s << (report.all_passed() ? "all checks passed" : "some checks failed") << '\n';
            return s.str();
        }
    }
    return {};
}

}  // namespace cosetlab
