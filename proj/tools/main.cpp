// cosetlab: coset leaders, leader codewords and error classification for small linear codes.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cosetlab/code.hpp"
#include "cosetlab/errors.hpp"
#include "cosetlab/ideal.hpp"
#include "cosetlab/leaders.hpp"
#include "cosetlab/report.hpp"
#include "cosetlab/verify.hpp"

namespace {

using namespace cosetlab;

enum Exit { Ok = 0, Usage = 1, Parse = 2, Cap = 3, Verification = 4 };

struct RunConfig {
    std::string command;
    std::string code_path;
    std::string order = "lex";
    std::optional<std::uint64_t> cap;
    std::string format = "json";
    bool audit = false;
    bool pretty = false;
    std::uint64_t seed = 1;
    std::string word;
};

EnumerationCaps caps_of(const RunConfig& cfg) {
    EnumerationCaps caps;
    if (cfg.cap) caps.words = caps.cosets = *cfg.cap;
    return caps;
}

bool within(std::optional<std::uint64_t> size, std::uint64_t cap) { return size && *size <= cap; }

int run(const RunConfig& cfg) {
    const auto code = load_code(cfg.code_path);
    const OrderSpec order{parse_tie_break(cfg.order)};
    const RenderOptions opt{parse_format(cfg.format), cfg.pretty};
    const auto caps = caps_of(cfg);
    const bool oracle_ok = within(checked_power(code.q(), code.n()), caps.words);

    if (cfg.command == "verify") {
        if (!oracle_ok) {
            std::string hint = "q^n exceeds the enumeration cap; the exhaustive checks cannot run.";
            if (within(checked_power(code.q(), code.redundancy()), caps.cosets))
                hint += " coset-leaders only needs the q^(n-k) cosets and remains available.";
            throw TooLarge(hint);
        }
        VerifyOptions vo;
        vo.order = order;
        vo.caps = caps;
        vo.seed = cfg.seed;
        const auto report = verify_code(code, vo);
        std::cout << render_verify(report, opt);
        return report.all_passed() ? Ok : Verification;
    }

    const auto reg = build_ideal(code, order, caps, cfg.audit);
    if (cfg.command == "info") {
        std::cout << render_info(describe_code(code, reg, caps), opt);
    } else if (cfg.command == "coset-leaders") {
        std::cout << render_coset_leaders(reg, opt, cfg.audit);
    } else if (cfg.command == "leaders") {
        const auto leaders = leader_codewords(reg, cfg.audit);
        if (!oracle_ok) throw TooLarge("q^n exceeds the enumeration cap; the test-set check cannot run");
        const bool test_set = is_test_set(reg.table(), leaders.words, caps).holds;
        std::cout << render_leaders(describe_code(code, reg, caps), leaders, test_set, opt);
    } else if (cfg.command == "errors") {
        const auto leaders = leader_codewords(reg);
        const auto cls = classify_errors(code, order, caps);
        const auto trial = trial_set_from_leaders(leaders, cls, caps);
        std::cout << render_errors(cls, trial, is_trial_set(cls, trial, caps), opt);
    } else if (cfg.command == "decode") {
        const auto y = parse_word(code.field(), code.n(), cfg.word);
        const auto leaders = leader_codewords(reg);
        std::cout << render_decode(decode_gradient(y, leaders.words, reg.table()), opt);
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coset leaders, leader codewords and error classification for linear codes over GF(p^m)"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--code", cfg.code_path, "Code file")->required()->check(CLI::ExistingFile);
        sub->add_option("--order", cfg.order, "Tie-break order")->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
        sub->add_option("--cap", cfg.cap, "Enumeration cap for q^n and q^(n-k)")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_flag("--audit", cfg.audit, "Keep provenance");
        sub->add_flag("--pretty", cfg.pretty, "Print field elements in coefficient form");
        sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    };
    const auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        sub->callback([&cfg, name] { cfg.command = name; });
        return sub;
    };
    add("info", "Code parameters");
    add("coset-leaders", "All coset leaders, per syndrome");
    add("leaders", "Leader codewords");
    add("errors", "Correctable and uncorrectable errors, trial set");
    add("decode", "Gradient-like decoding with the leader codewords")
        ->add_option("--word", cfg.word, "Received word, comma separated entries")
        ->required();
    add("verify", "Run every invariant check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        return run(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return Parse;
    } catch (const TooLarge& e) {
        std::cerr << "too large: " << e.what() << '\n';
        return Cap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::NotReducible:
            case ErrorKind::NotTrialSet:
            case ErrorKind::InternalInconsistency:
                return Verification;
            default:
                return Usage;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
}
