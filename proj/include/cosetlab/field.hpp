#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosetlab/error.hpp"

namespace cosetlab {

/// A field element of GF(p^m), packed as sum_j a_j p^(j-1) where a = a_1 + a_2 b + ... + a_m b^(m-1)
/// and b is a root of the defining polynomial. The coefficient list is the external view.
using Element = std::uint32_t;

/**
 * GF(p^m) built from an explicit monic irreducible polynomial f over Z_p.
 *
 * Construction validates primality of p, the degree of f and its irreducibility (exhaustive search
 * for a monic factor of degree <= m/2). Fields up to 2^16 elements are supported; for q <= 256 the
 * addition and multiplication tables are precomputed.
 */
class FieldSpec {
public:
    /// f holds m+1 coefficients in ascending degree order.
    FieldSpec(unsigned p, unsigned m, std::vector<unsigned> f);

    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    unsigned q() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return f_; }

    /// j is 0-based: coefficient of b^j.
    unsigned coeff(Element a, unsigned j) const noexcept { return digits_[static_cast<std::size_t>(a) * m_ + j]; }
    std::vector<unsigned> coeffs(Element a) const;
    Element from_coeffs(std::span<const unsigned> coeffs) const;

    /// b^j for 0 <= j < m, i.e. the element whose only nonzero coefficient is a 1 at position j.
    Element basis(unsigned j) const noexcept { return pow_p_[j]; }

    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;
    /// Throws std::domain_error for a == 0.
    Element inv(Element a) const;

    bool contains(Element a) const noexcept { return a < q_; }

    /// Human readable coefficient form, e.g. "1+b" or "2b^2".
    std::string pretty(Element a) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.p_ == b.p_ && a.f_ == b.f_; }

private:
    Element mul_slow(Element a, Element b) const noexcept;
    Element add_slow(Element a, Element b) const noexcept;

    unsigned p_;
    unsigned m_;
    unsigned q_;
    std::vector<unsigned> f_;
    std::vector<Element> pow_p_;
    std::vector<std::uint8_t> digits_;
    std::vector<Element> neg_;
    std::vector<Element> add_table_;
    std::vector<Element> mul_table_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// Validated field; default polynomial for (p, m) when f is omitted (available for p^m <= 128).
Field make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> f = std::nullopt);

/// Built-in defining polynomial for small fields. Empty when no default exists.
std::vector<unsigned> default_polynomial(unsigned p, unsigned m);

bool is_prime(unsigned p) noexcept;
/// Exhaustive factor check over Z_p. f is ascending, monic, degree >= 1.
bool is_irreducible(std::span<const unsigned> f, unsigned p);

/// Canonical representative in [0, p-1] of k * 1 in F_p.
unsigned psi(const FieldSpec& field, long long k) noexcept;

/**
 * A word of F_q^n. Immutable; the Hamming weight is cached at construction.
 */
class Word {
public:
    Word() = default;
    Word(Field field, std::vector<Element> entries);
    static Word zero(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return entries_.size(); }
    Element operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const Element> entries() const noexcept { return entries_; }
    std::size_t weight() const noexcept { return weight_; }
    bool is_zero() const noexcept { return weight_ == 0; }
    /// 0-based coordinates with a nonzero entry.
    std::vector<std::size_t> support() const;

    /// Copy with coordinate i replaced.
    Word with(std::size_t i, Element value) const;

    friend bool operator==(const Word& a, const Word& b) noexcept { return a.entries_ == b.entries_; }

private:
    Field field_;
    std::vector<Element> entries_;
    std::size_t weight_ = 0;
};

/// Pairs (i, j) with v_{i,j} != 0. Stored 0-based; printed 1-based.
struct GenSupport {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool contains(std::size_t i, std::size_t j) const;
    friend bool operator==(const GenSupport&, const GenSupport&) = default;
};

/// Length-nm tuple of coefficients, coordinate-major.
std::vector<unsigned> delta(const Word& v);
/// Coefficients are reduced mod p. Throws LengthMismatch if a.size() != n*m.
Word nabla(const Field& field, std::size_t n, std::span<const unsigned> a);
bool is_standard_form(const FieldSpec& field, std::span<const unsigned> a);
GenSupport gen_support(const Word& v);
/// e_ij = b^(j-1) e_i, ordered i-major, j-minor.
std::vector<Word> canonical_generators(const Field& field, std::size_t n);
Word canonical_generator(const Field& field, std::size_t n, std::size_t i, std::size_t j);

Word add(const Word& u, const Word& v);
Word sub(const Word& u, const Word& v);
Word scale(Element a, const Word& v);
/// v with coordinate i set to zero.
Word drop_coordinate(const Word& v, std::size_t i);

/// True iff v + e_ij stays in standard form, i.e. v_{i,j} + 1 < p.
bool wrap_free(const Word& v, std::size_t i, std::size_t j) noexcept;

/// Throws SpecMismatch unless both words live in the same field and have the same length.
void require_compatible(const Word& u, const Word& v);

/// Base-q integer with coordinate 0 least significant. Requires q^n < 2^64.
std::uint64_t pack(const Word& v) noexcept;
Word unpack(const Field& field, std::size_t n, std::uint64_t key);

/// q^n, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exp) noexcept;

std::string to_string(const Word& v);

}  // namespace cosetlab
