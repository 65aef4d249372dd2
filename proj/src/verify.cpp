#include "cosetlab/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace cosetlab {

namespace {

Word minus_basis(const Word& w, std::size_t i, std::size_t j) {
    const auto& f = *w.field();
    return w.with(i, f.sub(w[i], f.basis(static_cast<unsigned>(j))));
}

std::string pair_text(const Word& a, const Word& b) { return to_string(a) + " / " + to_string(b); }

}  // namespace

CheckCount check_leader_restrictions(const CosetTable& reference, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = reference.code();
    for_each_word(code.field(), code.n(), caps, [&](const Word& x) {
        if (!reference.is_leader(x)) return;
        for (const auto& sub_word : subset1_predecessors(x))
            out.record(reference.is_leader(sub_word), pair_text(x, sub_word));
    });
    return out;
}

CheckCount check_ancestor_weight_bound(const CosetTable& reference, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = reference.code();
    const auto q = code.q();
    for_each_word(code.field(), code.n(), caps, [&](const Word& x) {
        if (!reference.is_leader(x)) return;
        for (auto i : x.support()) {
            for (Element a = 0; a < q; ++a) {
                const Word other = x.with(i, a);
                out.record(other.weight() <= reference.coset_weight(other) + 1, pair_text(x, other));
            }
        }
    });
    return out;
}

CheckCount check_ideal_closure(const IdealRegistry& reg, const CosetTable& reference, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = reference.code();
    for_each_word(code.field(), code.n(), caps, [&](const Word& w) {
        for (auto i : w.support()) {
            if (reference.is_leader(drop_coordinate(w, i))) {
                out.record(reg.contains(w), to_string(w));
                return;
            }
        }
    });
    return out;
}

CheckCount check_ideal_completeness(const IdealRegistry& reg, const CosetTable& reference) {
    CheckCount out;
    const auto& built = reg.table();
    out.record(built.complete() && built.capacity() == reference.capacity(), "ideal table incomplete");
    reference.for_each([&](std::uint64_t s, const CosetRecord& expected) {
        const auto* got = built.find(s);
        const bool same = got && got->weight == expected.weight && got->leaders == expected.leaders;
        out.record(same, "syndrome " + std::to_string(s));
        for (const auto& v : expected.leaders) out.record(reg.contains(v), "leader " + to_string(v) + " not a member");
    });
    return out;
}

CheckCount check_weak_order_ideal(const IdealRegistry& reg) {
    CheckCount out;
    for (const auto& w : reg.members()) {
        if (w.is_zero()) continue;
        const auto gs = gen_support(w);
        const bool has_parent = std::any_of(gs.pairs.begin(), gs.pairs.end(), [&](const auto& ij) {
            return reg.contains(minus_basis(w, ij.first, ij.second));
        });
        out.record(has_parent, to_string(w));
    }
    return out;
}

CheckCount check_processing_order(const IdealRegistry& reg) {
    CheckCount out;
    const auto& m = reg.members();
    for (std::size_t a = 1; a < m.size(); ++a)
        out.record(cmp_weight_compatible(m[a - 1], m[a], reg.order()) < 0, pair_text(m[a - 1], m[a]));
    return out;
}

CheckCount check_order_monotone(const Field& field, std::size_t n, OrderSpec order, const EnumerationCaps& caps) {
    CheckCount out;
    for_each_word(field, n, caps, [&](const Word& w) {
        for (const auto& [i, j] : gen_support(w).pairs) {
            const Word lower = minus_basis(w, i, j);
            out.record(cmp_weight_compatible(lower, w, order) < 0, pair_text(lower, w));
        }
    });
    return out;
}

CheckCount check_leader_weight_bound(const LeaderSet& leaders, std::size_t rho) {
    CheckCount out;
    for (const auto& c : leaders.words) out.record(c.weight() <= 2 * rho + 1, to_string(c));
    return out;
}

CheckCount check_leader_boundary(const VoronoiGeometry& geom, const LeaderSet& leaders) {
    CheckCount out;
    const auto x0 = geom.boundary_x(geom.region(geom.code().zero()));
    for (const auto& w : leaders.words) {
        const auto dw = geom.region(w);
        const bool holds = VoronoiGeometry::intersects(x0, dw) || VoronoiGeometry::intersects(x0, geom.boundary_x(dw));
        out.record(holds, to_string(w));
    }
    return out;
}

CheckCount check_leader_converse(const VoronoiGeometry& geom, const LeaderSet& leaders) {
    CheckCount out;
    const auto x0 = geom.boundary_x(geom.region(geom.code().zero()));
    for (const auto& w : geom.codewords()) {
        if (w.is_zero() || !VoronoiGeometry::intersects(x0, geom.region(w))) continue;
        out.record(leaders.contains(w), to_string(w));
    }
    return out;
}

std::vector<Word> leaders_missing_strong_boundary(const VoronoiGeometry& geom, const LeaderSet& leaders) {
    const auto x0 = geom.boundary_x(geom.region(geom.code().zero()));
    std::vector<Word> out;
    for (const auto& w : leaders.words)
        if (!VoronoiGeometry::intersects(x0, geom.region(w))) out.push_back(w);
    return out;
}

CheckCount check_decoding(const CosetTable& reference, const std::vector<Word>& test_set, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = reference.code();
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        try {
            const auto r = decode_gradient(y, test_set, reference);
            const bool ok = r.error.weight() == reference.coset_weight(y) && r.error.weight() <= y.weight() &&
                            code.contains(r.codeword) && add(r.codeword, r.error) == y;
            out.record(ok, to_string(y));
        } catch (const NotReducible&) {
            out.record(false, to_string(y));
        }
    });
    return out;
}

CheckCount check_h_characterisation(const ErrorClassification& cls, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = cls.code;
    const auto words = code.codewords(caps);
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        out.record(h_set(words, y, cls.order).empty() == cls.is_correctable(y), to_string(y));
    });
    return out;
}

CheckCount check_subset1_monotone(const ErrorClassification& cls, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& code = cls.code;
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        const bool y_correctable = cls.is_correctable(y);
        for (const auto& x : subset1_predecessors(y)) {
            if (x == y) continue;
            // x ∈ E1 ⇒ y ∈ E1, equivalently y ∈ E0 ⇒ x ∈ E0.
            out.record(!y_correctable || cls.is_correctable(x), pair_text(x, y));
        }
    });
    return out;
}

CheckCount check_larger_halves(const ErrorClassification& cls, const EnumerationCaps& caps) {
    CheckCount out;
    for (const auto& c : cls.code.codewords(caps)) {
        if (c.is_zero()) continue;
        for (const auto& u : larger_halves(c, cls.order)) {
            const bool sandwich = c.weight() <= 2 * u.weight() && 2 * u.weight() <= c.weight() + 2;
            out.record(sandwich && !cls.is_correctable(u), pair_text(c, u));
        }
    }
    return out;
}

std::vector<std::vector<Word>> random_candidate_sets(const LinearCode& code, const LeaderSet& leaders,
                                                     std::size_t count, std::uint64_t seed,
                                                     const EnumerationCaps& caps) {
    std::vector<Word> nonzero;
    for (auto& c : code.codewords(caps))
        if (!c.is_zero()) nonzero.push_back(std::move(c));
    std::mt19937_64 rng(seed);
    const auto keep = [&](unsigned per_mille) { return rng() % 1000 < per_mille; };
    std::vector<std::vector<Word>> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<Word> set;
        switch (t % 3) {
            case 0: {
                const auto density = static_cast<unsigned>(100 + rng() % 500);
                for (const auto& c : nonzero)
                    if (keep(density)) set.push_back(c);
                break;
            }
            case 1:
                for (const auto& c : leaders.words)
                    if (keep(700)) set.push_back(c);
                break;
            default:
                for (const auto& c : leaders.words)
                    if (keep(850)) set.push_back(c);
                for (const auto& c : nonzero)
                    if (!leaders.contains(c) && keep(150)) set.push_back(c);
                break;
        }
        out.push_back(std::move(set));
    }
    return out;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.passed; });
}

namespace {

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& report) : report_(report) {}

    void add(std::string name, const CheckCount& count, std::string extra = {}) {
        CheckResult r{std::move(name), count.ok(), false, count.cases, std::move(extra)};
        if (!count.ok()) {
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += std::to_string(count.violations) + " violations, first: " + count.first_violation.value_or("?");
        }
        report_.checks.push_back(std::move(r));
    }

    void add(std::string name, bool passed, std::size_t cases, std::string detail) {
        report_.checks.push_back(CheckResult{std::move(name), passed, false, cases, std::move(detail)});
    }

    void info(std::string name, std::size_t cases, std::string detail) {
        report_.checks.push_back(CheckResult{std::move(name), true, true, cases, std::move(detail)});
    }

private:
    VerificationReport& report_;
};

CheckCount field_axioms(const FieldSpec& f, std::uint64_t seed) {
    CheckCount out;
    const std::uint64_t q = f.q();
    const auto probe = [&](Element a, Element b, Element c) {
        const bool ok = f.add(a, f.add(b, c)) == f.add(f.add(a, b), c) && f.add(a, b) == f.add(b, a) &&
                        f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c) && f.mul(a, b) == f.mul(b, a) &&
                        f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) && f.add(a, f.neg(a)) == 0 &&
                        f.sub(f.add(a, b), b) == a && f.add(a, 0) == a && f.mul(a, 1) == a &&
                        (a == 0 || f.mul(a, f.inv(a)) == 1);
        out.record(ok, std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
    };
    if (q * q * q <= (std::uint64_t{1} << 16)) {
        for (Element a = 0; a < q; ++a)
            for (Element b = 0; b < q; ++b)
                for (Element c = 0; c < q; ++c) probe(a, b, c);
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 20000; ++t)
            probe(static_cast<Element>(rng() % q), static_cast<Element>(rng() % q), static_cast<Element>(rng() % q));
    }
    return out;
}

CheckCount delta_nabla(const LinearCode& code, const EnumerationCaps& caps) {
    CheckCount out;
    const auto& field = code.field();
    for_each_word(field, code.n(), caps, [&](const Word& w) {
        const auto d = delta(w);
        out.record(is_standard_form(*field, d) && nabla(field, w.size(), d) == w &&
                       gen_support(w).pairs.size() == static_cast<std::size_t>(std::count_if(
                                                             d.begin(), d.end(), [](unsigned v) { return v != 0; })),
                   to_string(w));
    });
    return out;
}

CheckCount order_total(const LinearCode& code, OrderSpec order, std::uint64_t seed) {
    CheckCount out;
    const auto space = *checked_power(code.q(), code.n());
    std::mt19937_64 rng(seed);
    const auto draw = [&] { return unpack(code.field(), code.n(), rng() % space); };
    for (int t = 0; t < 2000; ++t) {
        const Word a = draw(), b = draw(), c = draw();
        const auto ab = cmp_weight_compatible(a, b, order);
        const auto ba = cmp_weight_compatible(b, a, order);
        bool ok = (ab == 0) == (a == b) && (ab < 0) == (ba > 0);
        if (ab < 0 && cmp_weight_compatible(b, c, order) < 0) ok = ok && cmp_weight_compatible(a, c, order) < 0;
        out.record(ok, to_string(a) + " / " + to_string(b) + " / " + to_string(c));
    }
    return out;
}

CheckCount order_admissible(std::size_t len, OrderSpec order, std::uint64_t seed) {
    CheckCount out;
    std::mt19937_64 rng(seed);
    std::vector<unsigned> zero(len, 0);
    const auto draw = [&] {
        std::vector<unsigned> v(len);
        for (auto& x : v) x = static_cast<unsigned>(rng() % 4);
        return v;
    };
    for (int t = 0; t < 2000; ++t) {
        const auto a = draw(), b = draw(), c = draw();
        auto ac = a, bc = b;
        for (std::size_t i = 0; i < len; ++i) {
            ac[i] += c[i];
            bc[i] += c[i];
        }
        const bool ok = cmp_admissible(zero, a, order) <= 0 && cmp_admissible(a, b, order) == cmp_admissible(ac, bc, order);
        out.record(ok, "tuple sample " + std::to_string(t));
    }
    return out;
}

CheckCount oracle_table(const CosetTable& reference, std::size_t t) {
    CheckCount out;
    const auto& code = reference.code();
    out.record(reference.complete() && reference.capacity() == code.coset_count(), "table incomplete");
    reference.for_each([&](std::uint64_t s, const CosetRecord& rec) {
        for (const auto& v : rec.leaders)
            out.record(code.syndrome_key(v) == s && v.weight() == rec.weight, to_string(v));
        if (rec.weight <= t) out.record(rec.leaders.size() == 1, "syndrome " + std::to_string(s) + " has several leaders");
    });
    return out;
}

CheckCount parity_check(const LinearCode& code) {
    CheckCount out;
    for (const auto& row : code.generator()) {
        const Word g(code.field(), row);
        out.record(code.syndrome(g).is_zero(), to_string(g));
    }
    return out;
}

}  // namespace

VerificationReport verify_code(const LinearCode& code, const VerifyOptions& options) {
    VerificationReport report;
    ReportBuilder rb(report);
    const auto& caps = options.caps;
    const auto order = options.order;
    const auto& field = code.field();

    rb.add("field.axioms", field_axioms(*field, options.seed));
    rb.add("field.delta-nabla", delta_nabla(code, caps));
    rb.add("order.total", order_total(code, order, options.seed));
    rb.add("order.admissible", order_admissible(code.n() * field->m(), order, options.seed));
    rb.add("order.monotone", check_order_monotone(field, code.n(), order, caps));
    rb.add("code.parity-check", parity_check(code));

    const auto reference = brute_force_coset_table(code, order, caps);
    const auto d = min_distance(code, caps);
    const auto t = error_capability(d);
    const auto rho = reference.covering_radius();
    rb.add("table.oracle", oracle_table(reference, t),
           "cosets=" + std::to_string(reference.capacity()) + " d=" + std::to_string(d) + " rho=" + std::to_string(rho));
    rb.add("leaders.restriction-closed", check_leader_restrictions(reference, caps));
    rb.add("leaders.ancestor-weight-bound", check_ancestor_weight_bound(reference, caps));

    const auto reg = build_ideal(code, order, caps);
    rb.add("ideal.completeness", check_ideal_completeness(reg, reference), "members=" + std::to_string(reg.members().size()));
    rb.add("ideal.closure", check_ideal_closure(reg, reference, caps));
    rb.add("ideal.weak-order-ideal", check_weak_order_ideal(reg));
    rb.add("ideal.processing-order", check_processing_order(reg));

    const auto leaders = leader_codewords(reg);
    const auto by_definition = leader_codewords_by_definition(reference, caps);
    {
        CheckCount same;
        same.record(leaders.words == by_definition.words,
                    "recipe " + std::to_string(leaders.size()) + " vs definition " + std::to_string(by_definition.size()));
        rb.add("lc.recipe-matches-definition", same, "size=" + std::to_string(leaders.size()));
    }
    {
        const auto verdict = is_test_set(reference, leaders.words, caps);
        rb.add("lc.test-set", verdict.holds, 1,
               verdict.counterexample ? "not reducible: " + to_string(*verdict.counterexample) : std::string{});
    }
    rb.add("lc.weight-bound", check_leader_weight_bound(leaders, rho),
           "max=" + std::to_string(leaders.max_weight()) + " bound=" + std::to_string(2 * rho + 1));

    const VoronoiGeometry geom(code, caps);
    rb.add("lc.boundary", check_leader_boundary(geom, leaders));
    rb.add("lc.converse", check_leader_converse(geom, leaders));
    {
        const auto z = geom.zero_neighbours();
        CheckCount inside;
        for (const auto& c : leaders.words)
            inside.record(std::find(z.begin(), z.end(), c) != z.end(), to_string(c));
        rb.add("lc.zero-neighbours", inside, "|Z|=" + std::to_string(z.size()));
    }
    {
        const auto d0 = geom.region(code.zero());
        CheckCount same;
        for (std::uint64_t key = 0; key < d0.size(); ++key) {
            const Word y = unpack(field, code.n(), key);
            same.record(d0[key] == reference.is_leader(y), to_string(y));
        }
        rb.add("lc.voronoi-zero", same);
    }
    rb.add("decode.soundness", check_decoding(reference, leaders.words, caps));

    const auto cls = classify_errors(code, order, caps);
    {
        CheckCount e0;
        e0.record(cls.e0_size() == code.coset_count(), "|E0| = " + std::to_string(cls.e0_size()));
        std::unordered_set<std::uint64_t> canonical;
        reference.for_each([&](std::uint64_t, const CosetRecord& rec) { canonical.insert(pack(rec.canonical())); });
        for (const auto& y : cls.e0) e0.record(canonical.contains(pack(y)) && reference.is_leader(y), to_string(y));
        rb.add("errors.correctable", e0,
               "E0=" + std::to_string(cls.e0_size()) + " E1=" + std::to_string(cls.e1_size()) +
                   " M1=" + std::to_string(cls.m1.size()) + " M0=" + std::to_string(cls.m0.size()));
    }
    rb.add("errors.h-empty-iff-correctable", check_h_characterisation(cls, caps));
    rb.add("errors.subset1-monotone", check_subset1_monotone(cls, caps));
    rb.add("errors.larger-halves", check_larger_halves(cls, caps));

    {
        const auto r = is_trial_set(cls, leaders.words, caps);
        rb.add("trial.leader-codewords", r.definition, 1,
               r.definition_witness ? "witness " + to_string(*r.definition_witness) : std::string{});
        CheckCount agree;
        agree.record(r.consistent(), "definition=" + std::to_string(r.definition) + " h=" + std::to_string(r.covers_h) +
                                         " halves=" + std::to_string(r.covers_larger_halves));
        rb.add("trial.equivalences-leader-codewords", agree,
               "definition=" + std::to_string(r.definition) + " h=" + std::to_string(r.covers_h) +
                   " halves=" + std::to_string(r.covers_larger_halves));
    }
    {
        const auto sets = random_candidate_sets(code, leaders, options.random_trial_sets, options.seed, caps);
        CheckCount agree;
        std::size_t trial = 0;
        for (std::size_t s = 0; s < sets.size(); ++s) {
            const auto r = is_trial_set(cls, sets[s], caps);
            if (r.definition) ++trial;
            agree.record(r.consistent(), "set " + std::to_string(s) + ": definition=" + std::to_string(r.definition) +
                                             " h=" + std::to_string(r.covers_h) +
                                             " halves=" + std::to_string(r.covers_larger_halves));
        }
        rb.add("trial.equivalences-random", agree,
               "trial=" + std::to_string(trial) + " non-trial=" + std::to_string(sets.size() - trial));
    }
    try {
        const auto pruned = trial_set_from_leaders(leaders, cls, caps);
        CheckCount ok;
        ok.record(is_trial_set(cls, pruned, caps).definition, "pruned set fails the definition");
        for (const auto& c : pruned) ok.record(leaders.contains(c) && trial_witness(c, cls).has_value(), to_string(c));
        rb.add("trial.pruned", ok, "size=" + std::to_string(pruned.size()));
    } catch (const NotTrialSet& e) {
        rb.add("trial.pruned", false, 1, e.what());
    }

    {
        const auto breaks = subset_monotonicity_breaks(cls);
        std::ostringstream s;
        s << breaks.size() << " found";
        if (!breaks.empty()) s << ", e.g. " << to_string(breaks.front().first) << " / " << to_string(breaks.front().second);
        rb.info("info.subset-monotonicity-breaks", breaks.size(), s.str());
    }
    {
        const auto misses = leaders_missing_strong_boundary(geom, leaders);
        rb.info("info.leaders-off-zero-boundary", misses.size(),
                std::to_string(misses.size()) + " of " + std::to_string(leaders.size()));
    }
    return report;
}

}  // namespace cosetlab
