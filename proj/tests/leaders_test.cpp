#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "cosetlab/leaders.hpp"
#include "cosetlab/verify.hpp"

using namespace cosetlab;

namespace {

const char* const kCodes[] = {"repetition3", "parity4", "hamming7", "tetracode", "random_gf4_5_2", "random_gf5_4_2"};

}  // namespace

TEST_CASE("repetition code leader codewords") {
    const auto c = corpus("repetition3");
    const auto L = leader_codewords(build_ideal(c));
    CHECK(L.words == std::vector<Word>{w(c.field(), {1, 1, 1})});
}

TEST_CASE("Hamming code leader codewords are its seven weight-3 codewords") {
    const auto c = corpus("hamming7");
    const auto L = leader_codewords(build_ideal(c));
    std::vector<Word> weight3;
    for (const auto& cw : c.codewords())
        if (cw.weight() == 3) weight3.push_back(cw);
    std::sort(weight3.begin(), weight3.end(), WeightOrderLess{});
    CHECK(L.words == weight3);
}

TEST_CASE("tetracode leader codewords attain the weight bound") {
    const auto c = corpus("tetracode");
    const auto reg = build_ideal(c);
    const auto L = leader_codewords(reg);
    CHECK(L.size() == 8);
    CHECK(L.max_weight() == 3);
    CHECK(reg.table().covering_radius() == 1);
}

TEST_CASE("frozen leader codeword counts") {
    const std::pair<const char*, std::size_t> sizes[] = {{"repetition3", 1}, {"parity4", 6},          {"hamming7", 7},
                                                         {"tetracode", 8},   {"random_gf4_5_2", 15}, {"random_gf5_4_2", 24}};
    for (auto [name, size] : sizes) {
        CAPTURE(name);
        CHECK(leader_codewords(build_ideal(corpus(name))).size() == size);
    }
}

TEST_CASE("recipe and definition agree, and the properties hold, under every order") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        const VoronoiGeometry geom(c);
        for (auto t : {TieBreak::Lex, TieBreak::DegLex, TieBreak::DegRevLex}) {
            const OrderSpec order{t};
            const auto reg = build_ideal(c, order);
            const auto L = leader_codewords(reg);
            const auto ref = brute_force_coset_table(c, order);
            CHECK(L.words == leader_codewords_by_definition(ref).words);
            CHECK(is_test_set(ref, L.words).holds);
            CHECK(check_leader_weight_bound(L, ref.covering_radius()).ok());
            CHECK(check_leader_boundary(geom, L).ok());
            CHECK(check_leader_converse(geom, L).ok());
            CHECK(check_decoding(ref, L.words).ok());
            for (const auto& cw : L.words) CHECK(c.contains(cw));
        }
    }
}

TEST_CASE("leader codewords are closed under nonzero scalars") {
    for (const auto* name : {"tetracode", "random_gf4_5_2", "random_gf5_4_2"}) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto L = leader_codewords(build_ideal(c));
        for (const auto& cw : L.words)
            for (Element a = 1; a < c.q(); ++a) CHECK(L.contains(scale(a, cw)));
    }
}

TEST_CASE("audit provenance reproduces each leader codeword") {
    const auto c = corpus("random_gf4_5_2");
    const auto reg = build_ideal(c);
    const auto L = leader_codewords(reg, true);
    REQUIRE(L.provenance.size() == L.size());
    const auto& f = *c.field();
    for (std::size_t a = 0; a < L.size(); ++a) {
        REQUIRE_FALSE(L.provenance[a].empty());
        for (const auto& t : L.provenance[a]) {
            CHECK(wrap_free(t.v1, t.i, t.j));
            CHECK(reg.is_coset_leader(drop_coordinate(t.v1, t.i)));
            CHECK(reg.is_coset_leader(t.v2));
            const Word x = t.v1.with(t.i, f.add(t.v1[t.i], f.basis(static_cast<unsigned>(t.j))));
            CHECK(sub(x, t.v2) == L.words[a]);
        }
    }
}

TEST_CASE("test set checks") {
    const auto c = corpus("repetition3");
    const auto ref = brute_force_coset_table(c, {});
    const auto f = c.field();
    CHECK(is_test_set(ref, std::vector<Word>{w(f, {1, 1, 1})}).holds);
    const auto none = is_test_set(ref, std::vector<Word>{});
    CHECK_FALSE(none.holds);
    REQUIRE(none.counterexample);
    CHECK(none.counterexample->weight() == 2);
}

TEST_CASE("gradient decoding") {
    const auto c = corpus("repetition3");
    const auto reg = build_ideal(c);
    const auto f = c.field();
    const auto L = leader_codewords(reg);
    const auto r = decode_gradient(w(f, {1, 1, 0}), L.words, reg.table());
    CHECK(r.error == w(f, {0, 0, 1}));
    CHECK(r.codeword == w(f, {1, 1, 1}));
    CHECK(r.steps == 1);
    const auto zero = decode_gradient(c.zero(), L.words, reg.table());
    CHECK(zero.steps == 0);
    CHECK_THROWS_AS(decode_gradient(w(f, {1, 1, 0}), std::vector<Word>{}, reg.table()), NotReducible);
    CHECK(descent_step(w(f, {1, 0, 0}), L.words) == std::nullopt);
}

TEST_CASE("Voronoi geometry of the repetition code") {
    const auto c = corpus("repetition3");
    const auto f = c.field();
    const VoronoiGeometry geom(c);
    const auto d0 = geom.region(c.zero());
    CHECK(geom.elements(d0) == std::vector<Word>{w(f, {0, 0, 0}), w(f, {1, 0, 0}), w(f, {0, 1, 0}), w(f, {0, 0, 1})});
    // 111 is two away from every word of D(0).
    CHECK(geom.elements(geom.boundary_x(d0)) ==
          std::vector<Word>{w(f, {1, 1, 0}), w(f, {1, 0, 1}), w(f, {0, 1, 1})});
    CHECK(geom.zero_neighbours() == std::vector<Word>{w(f, {1, 1, 1})});
    CHECK(geom.distance_to_code(w(f, {1, 1, 0})) == 1);
    CHECK(voronoi_contains(c, c.zero(), w(f, {1, 0, 0})));
    CHECK_FALSE(voronoi_contains(c, c.zero(), w(f, {1, 1, 0})));
}

TEST_CASE("boundary of the empty set and of the whole space") {
    const auto c = corpus("tetracode");
    const VoronoiGeometry geom(c);
    const VoronoiGeometry::WordSet none(geom.space_size(), false), all(geom.space_size(), true);
    CHECK(geom.elements(geom.boundary_x(none)).empty());
    CHECK(geom.elements(geom.boundary_x(all)).empty());
    CHECK(geom.elements(geom.boundary(all)).empty());
}

TEST_CASE("Voronoi region of zero is the set of coset leaders") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        const VoronoiGeometry geom(c);
        const auto ref = brute_force_coset_table(c, {});
        const auto d0 = geom.region(c.zero());
        auto leaders = ref.all_leaders();
        CHECK(geom.make_set(leaders) == d0);
    }
}

TEST_CASE("leader codewords are zero neighbours") {
    for (const auto* name : kCodes) {
        CAPTURE(name);
        const auto c = corpus(name);
        const auto z = VoronoiGeometry(c).zero_neighbours();
        for (const auto& cw : leader_codewords(build_ideal(c)).words)
            CHECK(std::find(z.begin(), z.end(), cw) != z.end());
    }
}

TEST_CASE("geometry cap") { CHECK_THROWS_AS(VoronoiGeometry(corpus("hamming7"), EnumerationCaps{64, 64}), TooLarge); }
