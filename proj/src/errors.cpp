#include "cosetlab/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace cosetlab {

namespace {

std::uint64_t support_mask(const Word& w) {
    std::uint64_t mask = 0;
    for (auto i : w.support()) mask |= std::uint64_t{1} << i;
    return mask;
}

bool precedes_or_equal(const Word& a, const Word& b, OrderSpec order) { return cmp_weight_compatible(a, b, order) <= 0; }

}  // namespace

bool ErrorClassification::in_m1(const Word& y) const { return std::find(m1.begin(), m1.end(), y) != m1.end(); }

std::vector<Word> subset1_predecessors(const Word& y) {
    const auto supp = y.support();
    if (supp.size() >= 63) throw TooLarge("support too large to enumerate sub-words");
    std::vector<Word> out;
    out.reserve(std::size_t{1} << supp.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << supp.size()); ++mask) {
        std::vector<Element> entries(y.size(), 0);
        for (std::size_t b = 0; b < supp.size(); ++b)
            if (mask >> b & 1u) entries[supp[b]] = y[supp[b]];
        out.emplace_back(y.field(), std::move(entries));
    }
    return out;
}

std::vector<Word> subset1_successors(const Word& y) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] == 0) free.push_back(i);
    const std::uint64_t q = y.field()->q();
    const auto count = checked_power(q, free.size());
    if (!count) throw TooLarge("too many super-words to enumerate");
    std::vector<Word> out;
    out.reserve(*count);
    for (std::uint64_t key = 0; key < *count; ++key) {
        std::vector<Element> entries(y.entries().begin(), y.entries().end());
        std::uint64_t rest = key;
        for (auto i : free) {
            entries[i] = static_cast<Element>(rest % q);
            rest /= q;
        }
        out.emplace_back(y.field(), std::move(entries));
    }
    return out;
}

ErrorClassification classify_errors(const LinearCode& code, OrderSpec order, const EnumerationCaps& caps) {
    if (code.coset_count() > caps.cosets) throw TooLarge("q^(n-k) exceeds the coset cap");
    ErrorClassification cls{code, order, {}, {}, {}, {}};
    std::vector<std::optional<Word>> least(code.coset_count());
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        auto& slot = least[code.syndrome_key(y)];
        if (!slot || cmp_weight_compatible(y, *slot, order) < 0) slot = y;
    });
    const auto space = *checked_power(code.q(), code.n());
    cls.correctable.assign(space, false);
    for (auto& w : least) {
        cls.correctable[pack(*w)] = true;
        cls.e0.push_back(std::move(*w));
    }
    std::sort(cls.e0.begin(), cls.e0.end(), WeightOrderLess{order});

    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        if (cls.correctable[pack(y)]) {
            const auto ups = subset1_successors(y);
            const bool maximal = std::none_of(ups.begin(), ups.end(), [&](const Word& z) {
                return !(z == y) && cls.correctable[pack(z)];
            });
            if (maximal) cls.m0.push_back(y);
        } else {
            const auto downs = subset1_predecessors(y);
            const bool minimal = std::none_of(downs.begin(), downs.end(), [&](const Word& x) {
                return !(x == y) && !cls.correctable[pack(x)];
            });
            if (minimal) cls.m1.push_back(y);
        }
    });
    std::sort(cls.m1.begin(), cls.m1.end(), WeightOrderLess{order});
    std::sort(cls.m0.begin(), cls.m0.end(), WeightOrderLess{order});
    return cls;
}

std::vector<Word> h_set(std::span<const Word> codewords, const Word& y, OrderSpec order) {
    std::vector<Word> out;
    for (const auto& c : codewords)
        if (cmp_weight_compatible(sub(y, c), y, order) < 0) out.push_back(c);
    return out;
}

std::vector<Word> h_set(const LinearCode& code, const Word& y, OrderSpec order, const EnumerationCaps& caps) {
    const auto words = code.codewords(caps);
    return h_set(words, y, order);
}

std::vector<Word> larger_halves(const Word& c, OrderSpec order) {
    if (c.is_zero()) throw ZeroCodeword("larger halves are defined for nonzero codewords only");
    std::vector<Word> candidates;
    for (auto& u : subset1_predecessors(c))
        if (cmp_weight_compatible(sub(u, c), u, order) < 0) candidates.push_back(std::move(u));
    std::vector<std::uint64_t> masks;
    for (const auto& u : candidates) masks.push_back(support_mask(u));
    std::vector<Word> out;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < candidates.size() && minimal; ++b)
            if (b != a && (masks[b] & masks[a]) == masks[b]) minimal = false;
        if (minimal) out.push_back(candidates[a]);
    }
    std::sort(out.begin(), out.end(), WeightOrderLess{order});
    return out;
}

std::vector<Word> larger_halves(const LinearCode& code, const Word& c, OrderSpec order) {
    if (!code.contains(c)) throw SpecMismatch(to_string(c) + " is not a codeword");
    return larger_halves(c, order);
}

TrialSetReport is_trial_set(const ErrorClassification& cls, std::span<const Word> trial, const EnumerationCaps& caps) {
    const auto& code = cls.code;
    TrialSetReport report;
    report.definition = true;
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        if (!report.definition) return;
        const bool local_min = std::all_of(trial.begin(), trial.end(),
                                           [&](const Word& c) { return precedes_or_equal(y, sub(y, c), cls.order); });
        if (local_min != cls.is_correctable(y)) {
            report.definition = false;
            report.definition_witness = y;
        }
    });

    report.covers_h = std::all_of(cls.m1.begin(), cls.m1.end(),
                                  [&](const Word& y) { return !h_set(trial, y, cls.order).empty(); });

    std::unordered_set<std::uint64_t> halves;
    for (const auto& c : trial)
        for (const auto& u : larger_halves(c, cls.order)) halves.insert(pack(u));
    report.covers_larger_halves =
        std::all_of(cls.m1.begin(), cls.m1.end(), [&](const Word& y) { return halves.contains(pack(y)); });
    return report;
}

std::optional<Word> trial_witness(const Word& c, const ErrorClassification& cls) {
    for (const auto& y : larger_halves(c, cls.order))
        if (cls.in_m1(y) && cls.is_correctable(sub(y, c))) return y;
    return std::nullopt;
}

std::vector<Word> trial_set_from_leaders(const LeaderSet& leaders, const ErrorClassification& cls,
                                         const EnumerationCaps& caps) {
    std::vector<Word> out;
    for (const auto& c : leaders.words)
        if (trial_witness(c, cls)) out.push_back(c);
    const auto report = is_trial_set(cls, out, caps);
    if (!report.definition)
        throw NotTrialSet("filtered leader codewords fail the trial-set definition" +
                          (report.definition_witness ? " at " + to_string(*report.definition_witness) : std::string{}));
    return out;
}

std::vector<std::pair<Word, Word>> subset_monotonicity_breaks(const ErrorClassification& cls, std::size_t limit) {
    std::vector<std::pair<Word, Word>> out;
    const auto& field = cls.code.field();
    for (const auto& y : cls.e0) {
        const auto dy = delta(y);
        // Mixed-radix walk over tuples with 1 <= x_ij <= y_ij on the generalized support.
        std::vector<unsigned> dx(dy.size(), 0);
        for (std::size_t t = 0; t < dy.size(); ++t) dx[t] = dy[t] ? 1u : 0u;
        while (true) {
            if (dx != dy) {
                const Word x = nabla(field, y.size(), dx);
                if (!cls.is_correctable(x)) {
                    out.emplace_back(x, y);
                    if (out.size() >= limit) return out;
                }
            }
            std::size_t t = 0;
            while (t < dx.size() && (dy[t] == 0 || dx[t] == dy[t])) {
                if (dy[t]) dx[t] = 1;
                ++t;
            }
            if (t == dx.size()) break;
            ++dx[t];
        }
    }
    return out;
}

}  // namespace cosetlab
