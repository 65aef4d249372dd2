#include "doctest.h"

#include <vector>

#include "corpus.hpp"
#include "cosetlab/field.hpp"

using namespace cosetlab;

TEST_CASE("prime field arithmetic") {
    const auto f = make_field(5, 1);
    CHECK(f->q() == 5);
    CHECK(f->add(3, 4) == 2);
    CHECK(f->mul(3, 4) == 2);
    CHECK(f->neg(2) == 3);
    CHECK(f->inv(2) == 3);
    CHECK(f->basis(0) == 1);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
}

TEST_CASE("GF(4) with b^2 = b + 1") {
    const auto f = make_field(2, 2, std::vector<unsigned>{1, 1, 1});
    const Element b = f->basis(1);
    CHECK(b == 2);
    CHECK(f->mul(b, b) == f->add(b, 1));
    CHECK(f->mul(b, f->add(b, 1)) == 1);
    CHECK(f->pretty(3) == "1+b");
    CHECK(f->pretty(0) == "0");
    CHECK(f->coeffs(3) == std::vector<unsigned>{1, 1});
    CHECK(f->from_coeffs(std::vector<unsigned>{0, 1}) == 2);
}

TEST_CASE("GF(9) packs coefficients base p") {
    const auto f = make_field(3, 2);
    // 2 + b is packed as 2 + 1*3.
    CHECK(f->from_coeffs(std::vector<unsigned>{2, 1}) == 5);
    CHECK(f->coeff(5, 0) == 2);
    CHECK(f->coeff(5, 1) == 1);
    for (Element a = 1; a < f->q(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        const auto f = make_field(p, m);
        const unsigned q = f->q();
        for (Element a = 0; a < q; ++a)
            for (Element b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
                for (Element c = 0; c < q; ++c) CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
    }
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(make_field(4, 1), NotPrime);
    CHECK_THROWS_AS(make_field(2, 2, std::vector<unsigned>{1, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(make_field(2, 2, std::vector<unsigned>{1, 1}), DegreeMismatch);
    CHECK_THROWS_AS(make_field(2, 2, std::vector<unsigned>{1, 1, 0}), DegreeMismatch);
    CHECK_THROWS_AS(make_field(2, 17, std::vector<unsigned>(18, 1)), TooLarge);
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(std::vector<unsigned>{1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible(std::vector<unsigned>{1, 0, 1}, 2));
    CHECK(is_irreducible(std::vector<unsigned>{1, 1, 0, 1}, 2));
    CHECK_FALSE(is_irreducible(std::vector<unsigned>{1, 0, 0, 1}, 2));
    CHECK(is_irreducible(std::vector<unsigned>{2, 1}, 3));
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}})
        CHECK(is_irreducible(default_polynomial(p, m), p));
}

TEST_CASE("psi reduces integers into the prime field") {
    const auto f = make_field(3, 2);
    CHECK(psi(*f, 7) == 1);
    CHECK(psi(*f, -1) == 2);
    CHECK(psi(*f, 0) == 0);
}

TEST_CASE("delta and nabla over GF(4)") {
    const auto f = make_field(2, 2);
    const Word v = w(f, {3, 0, 2});
    CHECK(delta(v) == std::vector<unsigned>{1, 1, 0, 0, 0, 1});
    CHECK(nabla(f, 3, delta(v)) == v);
    CHECK(is_standard_form(*f, delta(v)));
    CHECK_FALSE(is_standard_form(*f, std::vector<unsigned>{2, 0, 0, 0, 0, 0}));
    // Coefficients are reduced: 2 ≡ 0 over GF(2).
    CHECK(nabla(f, 3, std::vector<unsigned>{2, 1, 0, 0, 3, 0}) == w(f, {2, 0, 1}));
    CHECK_THROWS_AS(nabla(f, 3, std::vector<unsigned>{1, 0}), LengthMismatch);
}

TEST_CASE("nabla is a left inverse of delta on every word") {
    const auto f = make_field(3, 2);
    for (std::uint64_t key = 0; key < 81 * 9; key += 7) {
        const Word v = unpack(f, 3, key);
        CHECK(nabla(f, 3, delta(v)) == v);
    }
}

TEST_CASE("generalized support and canonical generators") {
    const auto f = make_field(2, 2);
    const auto gs = gen_support(w(f, {3, 0, 2}));
    CHECK(gs.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {2, 1}});
    CHECK(gs.contains(2, 1));
    CHECK_FALSE(gs.contains(2, 0));

    const auto gens = canonical_generators(f, 2);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0] == w(f, {1, 0}));
    CHECK(gens[1] == w(f, {2, 0}));
    CHECK(gens[3] == w(f, {0, 2}));
    CHECK(canonical_generator(f, 2, 1, 0) == w(f, {0, 1}));
}

TEST_CASE("word arithmetic") {
    const auto f = make_field(3, 1);
    const Word a = w(f, {1, 2, 0, 1});
    const Word b = w(f, {2, 2, 1, 0});
    CHECK(add(a, b) == w(f, {0, 1, 1, 1}));
    CHECK(sub(a, b) == w(f, {2, 0, 2, 1}));
    CHECK(scale(2, a) == w(f, {2, 1, 0, 2}));
    CHECK(a.weight() == 3);
    CHECK(a.support() == std::vector<std::size_t>{0, 1, 3});
    CHECK(drop_coordinate(a, 1) == w(f, {1, 0, 0, 1}));
    CHECK(wrap_free(a, 0, 0));
    CHECK_FALSE(wrap_free(a, 1, 0));
    CHECK_THROWS_AS(add(a, w(f, {1, 2})), SpecMismatch);
    CHECK_THROWS_AS(add(a, w(make_field(5, 1), {1, 2, 0, 1})), SpecMismatch);
    CHECK_THROWS_AS(Word(f, {3}), std::out_of_range);
}

TEST_CASE("pack and unpack round trip") {
    const auto f = make_field(5, 1);
    const Word v = w(f, {4, 0, 3});
    CHECK(pack(v) == 4 + 3 * 25);
    CHECK(unpack(f, 3, pack(v)) == v);
    CHECK(checked_power(2, 64) == std::nullopt);
    CHECK(checked_power(3, 4) == 81u);
}
