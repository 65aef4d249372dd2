#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "cosetlab/errors.hpp"
#include "cosetlab/verify.hpp"

using namespace cosetlab;

namespace {

const char* const kCodes[] = {"repetition3", "parity4", "hamming7", "tetracode", "random_gf4_5_2", "random_gf5_4_2"};

}  // namespace

TEST_CASE("repetition code classification") {
    const auto c = corpus("repetition3");
    const auto f = c.field();
    const auto cls = classify_errors(c);
    CHECK(cls.e0 == std::vector<Word>{w(f, {0, 0, 0}), w(f, {0, 0, 1}), w(f, {0, 1, 0}), w(f, {1, 0, 0})});
    CHECK(cls.e0_size() == 4);
    CHECK(cls.e1_size() == 4);
    CHECK(cls.m1 == std::vector<Word>{w(f, {0, 1, 1}), w(f, {1, 0, 1}), w(f, {1, 1, 0})});
    CHECK(cls.m0 == std::vector<Word>{w(f, {0, 0, 1}), w(f, {0, 1, 0}), w(f, {1, 0, 0})});
    CHECK_FALSE(cls.in_m1(w(f, {1, 1, 1})));
}

TEST_CASE("sub-words and super-words under restriction") {
    const auto f = make_field(3, 1);
    const auto down = subset1_predecessors(w(f, {2, 0, 1}));
    CHECK(down.size() == 4);
    CHECK(std::find(down.begin(), down.end(), w(f, {2, 0, 0})) != down.end());
    const auto up = subset1_successors(w(f, {2, 0, 1}));
    CHECK(up.size() == 3);
    for (const auto& z : up) CHECK(subset1(w(f, {2, 0, 1}), z));
}

TEST_CASE("H(y)") {
    const auto c = corpus("repetition3");
    const auto f = c.field();
    CHECK(h_set(c, c.zero()).empty());
    CHECK(h_set(c, w(f, {1, 1, 0})) == std::vector<Word>{w(f, {1, 1, 1})});
}

TEST_CASE("larger halves") {
    const auto f = make_field(2, 1);
    CHECK(larger_halves(w(f, {1, 1, 1})) == std::vector<Word>{w(f, {0, 1, 1}), w(f, {1, 0, 1}), w(f, {1, 1, 0})});
    CHECK_THROWS_AS(larger_halves(Word::zero(f, 3)), ZeroCodeword);
    const auto c = corpus("repetition3");
    CHECK_THROWS_AS(larger_halves(c, w(f, {1, 1, 0})), SpecMismatch);
}

TEST_CASE("taxonomy invariants hold on every code") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        for (auto t : {TieBreak::Lex, TieBreak::DegRevLex}) {
            const auto cls = classify_errors(c, OrderSpec{t});
            CHECK(cls.e0_size() == c.coset_count());
            CHECK(check_h_characterisation(cls).ok());
            CHECK(check_subset1_monotone(cls).ok());
            CHECK(check_larger_halves(cls).ok());
            const auto ref = brute_force_coset_table(c, OrderSpec{t});
            for (const auto& y : cls.e0) CHECK(ref.at(y).canonical() == y);
        }
    }
}

TEST_CASE("trial sets of the repetition code") {
    const auto c = corpus("repetition3");
    const auto f = c.field();
    const auto cls = classify_errors(c);
    const auto full = is_trial_set(cls, std::vector<Word>{w(f, {1, 1, 1})});
    CHECK(full.definition);
    CHECK(full.covers_h);
    CHECK(full.covers_larger_halves);
    CHECK(full.is_trial_set());
    const auto none = is_trial_set(cls, std::vector<Word>{});
    CHECK_FALSE(none.definition);
    CHECK(none.consistent());
    CHECK(trial_set_from_leaders(leader_codewords(build_ideal(c)), cls) == std::vector<Word>{w(f, {1, 1, 1})});
}

TEST_CASE("leader codewords form a trial set and the pruned set keeps a witness per codeword") {
    const std::pair<const char*, std::size_t> pruned_sizes[] = {{"repetition3", 1}, {"parity4", 3},
                                                                {"hamming7", 7},    {"tetracode", 8},
                                                                {"random_gf4_5_2", 15}, {"random_gf5_4_2", 8}};
    for (auto [name, size] : pruned_sizes) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto L = leader_codewords(build_ideal(c));
        const auto cls = classify_errors(c);
        const auto full = is_trial_set(cls, L.words);
        CHECK(full.definition);
        CHECK(full.covers_h);
        const auto T = trial_set_from_leaders(L, cls);
        CHECK(T.size() == size);
        CHECK(is_trial_set(cls, T).definition);
        for (const auto& cw : T) {
            CHECK(L.contains(cw));
            const auto y = trial_witness(cw, cls);
            REQUIRE(y);
            CHECK(cls.in_m1(*y));
            CHECK(cls.is_correctable(sub(*y, cw)));
        }
    }
}

TEST_CASE("the three trial set characterisations agree for binary codes") {
    for (const auto* name : {"repetition3", "parity4", "hamming7"}) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto L = leader_codewords(build_ideal(c));
        const auto cls = classify_errors(c);
        CHECK(is_trial_set(cls, L.words).consistent());
        for (const auto& T : random_candidate_sets(c, L, 100, 1)) CHECK(is_trial_set(cls, T).consistent());
    }
}

TEST_CASE("the definition and the H(y) cover agree on every code") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto L = leader_codewords(build_ideal(c));
        const auto cls = classify_errors(c);
        for (const auto& T : random_candidate_sets(c, L, 100, 1)) {
            const auto r = is_trial_set(cls, T);
            CHECK(r.definition == r.covers_h);
        }
    }
}

TEST_CASE("over GF(5) a minimal uncorrectable error need not be a larger half") {
    const auto c = corpus("random_gf5_4_2");
    const auto f = c.field();
    const auto cls = classify_errors(c);
    const Word y = w(f, {0, 1, 0, 1});
    const Word cw = w(f, {0, 1, 4, 3});
    CHECK(cls.in_m1(y));
    CHECK(c.contains(cw));
    CHECK(cmp_weight_compatible(sub(y, cw), y, cls.order) < 0);
    bool is_half = false;
    for (const auto& other : c.codewords())
        if (!other.is_zero())
            for (const auto& u : larger_halves(other)) is_half = is_half || u == y;
    CHECK_FALSE(is_half);
    const auto r = is_trial_set(cls, leader_codewords(build_ideal(c)).words);
    CHECK(r.definition);
    CHECK(r.covers_h);
    CHECK_FALSE(r.covers_larger_halves);
}

TEST_CASE("coefficient-wise inclusion is not monotone over GF(5)") {
    const auto c = corpus("random_gf5_4_2");
    const auto f = c.field();
    const auto cls = classify_errors(c);
    const auto breaks = subset_monotonicity_breaks(cls, 100);
    CHECK(breaks.size() == 18);
    CHECK(std::find(breaks.begin(), breaks.end(), std::pair{w(f, {0, 0, 1, 2}), w(f, {0, 0, 1, 3})}) != breaks.end());
    for (const auto& [x, y] : breaks) {
        CHECK(subset(x, y));
        CHECK_FALSE(cls.is_correctable(x));
        CHECK(cls.is_correctable(y));
    }
    for (const auto* name : {"repetition3", "hamming7", "tetracode"})
        CHECK(subset_monotonicity_breaks(classify_errors(corpus(name))).empty());
}

TEST_CASE("classification cap") {
    CHECK_THROWS_AS(classify_errors(corpus("hamming7"), {}, EnumerationCaps{64, 64}), TooLarge);
}
