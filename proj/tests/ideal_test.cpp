#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "cosetlab/ideal.hpp"
#include "cosetlab/verify.hpp"

using namespace cosetlab;

namespace {

const char* const kCodes[] = {"repetition3", "parity4", "hamming7", "tetracode", "random_gf4_5_2", "random_gf5_4_2"};

}  // namespace

TEST_CASE("repetition code ideal") {
    const auto c = corpus("repetition3");
    const auto f = c.field();
    const auto reg = build_ideal(c);
    CHECK(reg.members() == std::vector<Word>{w(f, {0, 0, 0}), w(f, {0, 0, 1}), w(f, {0, 1, 0}), w(f, {1, 0, 0}),
                                             w(f, {0, 1, 1}), w(f, {1, 0, 1}), w(f, {1, 1, 0})});
    CHECK_FALSE(reg.contains(w(f, {1, 1, 1})));
    CHECK(is_coset_leader(reg, w(f, {0, 1, 0})));
    CHECK(coset_leaders_of(reg, w(f, {1, 1, 0})) == std::vector<Word>{w(f, {0, 0, 1})});
}

TEST_CASE("members heavier than their coset by two are kept but not expanded") {
    const auto f = make_field(2, 1);
    const auto reg = build_ideal(LinearCode(f, 2, {{1, 1}}));
    CHECK(reg.contains(w(f, {1, 1})));
    CHECK(reg.stats().overweight_members == 1);
    CHECK(coset_leaders_of(reg, w(f, {1, 0})) == std::vector<Word>{w(f, {0, 1}), w(f, {1, 0})});

    const auto full = build_ideal(LinearCode(f, 2, {{1, 0}, {0, 1}}));
    CHECK(full.members().size() == 3);
    CHECK(full.stats().overweight_members == 0);
    CHECK(full.table().all_leaders() == std::vector<Word>{Word::zero(f, 2)});
}

TEST_CASE("ideal coset tables equal the brute force tables") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        for (auto t : {TieBreak::Lex, TieBreak::DegLex, TieBreak::DegRevLex}) {
            const OrderSpec order{t};
            const auto reg = build_ideal(c, order);
            const auto ref = brute_force_coset_table(c, order);
            CHECK(check_ideal_completeness(reg, ref).ok());
            CHECK(check_weak_order_ideal(reg).ok());
            CHECK(check_processing_order(reg).ok());
        }
    }
}

TEST_CASE("frozen ideal sizes") {
    const std::pair<const char*, std::size_t> sizes[] = {{"repetition3", 7}, {"parity4", 11},       {"hamming7", 29},
                                                         {"tetracode", 33},  {"random_gf4_5_2", 372}, {"random_gf5_4_2", 253}};
    for (auto [name, members] : sizes) {
        CAPTURE(name);
        CHECK(build_ideal(corpus(name)).members().size() == members);
    }
}

TEST_CASE("one-coordinate extensions of leaders lie in the ideal for binary codes and the tetracode") {
    for (const auto* name : {"repetition3", "parity4", "hamming7", "tetracode"}) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto ref = brute_force_coset_table(c, {});
        CHECK(check_ideal_closure(build_ideal(c), ref).ok());
    }
}

TEST_CASE("over GF(4) a one-coordinate extension of a leader can fall outside the ideal") {
    const auto c = corpus("random_gf4_5_2");
    const auto f = c.field();
    const auto reg = build_ideal(c);
    const auto ref = brute_force_coset_table(c, {});
    const Word x = w(f, {0, 3, 3, 0, 3});
    CHECK(ref.is_leader(drop_coordinate(x, 1)));
    CHECK_FALSE(reg.contains(x));
    // The intermediate word sits two above its coset weight, so neither criterion expands it.
    const Word mid = w(f, {0, 1, 3, 0, 3});
    CHECK(reg.contains(mid));
    CHECK(mid.weight() == ref.coset_weight(mid) + 2);
    const auto count = check_ideal_closure(reg, ref);
    CHECK(count.violations == 1);
    CHECK(check_ideal_closure(build_ideal(corpus("random_gf5_4_2")), brute_force_coset_table(corpus("random_gf5_4_2"), {}))
              .violations == 100);
}

TEST_CASE("audit mode records a parent for every member") {
    const auto c = corpus("tetracode");
    const auto reg = build_ideal(c, {}, {}, true);
    for (const auto& v : reg.members()) {
        const auto o = reg.origin(v);
        REQUIRE(o);
        if (v.is_zero()) continue;
        const Word parent = unpack(c.field(), c.n(), o->parent);
        CHECK(reg.contains(parent));
        CHECK((o->criterion == 1 || o->criterion == 2));
        CHECK(cmp_weight_compatible(parent, v, reg.order()) < 0);
    }
}

TEST_CASE("coset cap") {
    CHECK_THROWS_AS(build_ideal(corpus("hamming7"), {}, EnumerationCaps{1u << 24, 4}), TooLarge);
}
