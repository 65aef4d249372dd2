#include "cosetlab/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cosetlab {

namespace {

struct DefaultPolynomial {
    unsigned p;
    unsigned m;
    std::vector<unsigned> f;
};

// Primitive polynomials for every extension field with p^m <= 128. Degree one defaults to X - 1.
const std::vector<DefaultPolynomial>& default_table() {
    static const std::vector<DefaultPolynomial> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {3, 2, {2, 1, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {5, 2, {2, 1, 1}},
        {5, 3, {2, 3, 0, 1}},
        {7, 2, {3, 1, 1}},
        {11, 2, {7, 1, 1}},
    };
    return table;
}

// Remainder of a modulo a monic b over Z_p, in place. Both ascending.
void poly_rem(std::vector<unsigned>& a, std::span<const unsigned> b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        a.pop_back();
    }
}

constexpr unsigned kMaxFieldSize = 1u << 16;
constexpr unsigned kTableFieldSize = 256;

}  // namespace

bool is_prime(unsigned p) noexcept {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const unsigned> f, unsigned p) {
    const std::size_t m = f.size() - 1;
    if (m <= 1) return true;
    // Any reducible f of degree m has a monic factor of degree d <= m/2.
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::vector<unsigned> g(d + 1, 0);
        g[d] = 1;
        while (true) {
            std::vector<unsigned> r(f.begin(), f.end());
            poly_rem(r, g, p);
            if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
            std::size_t pos = 0;
            while (pos < d && ++g[pos] == p) g[pos++] = 0;
            if (pos == d) break;
        }
    }
    return true;
}

std::vector<unsigned> default_polynomial(unsigned p, unsigned m) {
    if (m == 1 && is_prime(p)) return {p - 1, 1};
    for (const auto& entry : default_table())
        if (entry.p == p && entry.m == m) return entry.f;
    return {};
}

FieldSpec::FieldSpec(unsigned p, unsigned m, std::vector<unsigned> f) : p_(p), m_(m), f_(std::move(f)) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m == 0) throw DegreeMismatch("extension degree must be positive");
    if (f_.size() != static_cast<std::size_t>(m) + 1)
        throw DegreeMismatch("defining polynomial needs " + std::to_string(m + 1) + " coefficients, got " +
                             std::to_string(f_.size()));
    for (auto c : f_)
        if (c >= p) throw DegreeMismatch("polynomial coefficient " + std::to_string(c) + " outside [0, p-1]");
    if (f_.back() != 1) throw DegreeMismatch("defining polynomial must be monic of degree m");

    std::uint64_t q = 1;
    for (unsigned j = 0; j < m; ++j) {
        pow_p_.push_back(static_cast<Element>(q));
        q *= p;
        if (q > kMaxFieldSize) throw TooLarge("fields larger than 2^16 elements are not supported");
    }
    q_ = static_cast<unsigned>(q);
    if (!is_irreducible(f_, p)) throw NotIrreducible("defining polynomial is reducible over Z_" + std::to_string(p));

    digits_.resize(static_cast<std::size_t>(q_) * m_);
    neg_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
        Element rest = a;
        Element negated = 0;
        for (unsigned j = 0; j < m_; ++j) {
            const unsigned c = rest % p_;
            rest /= p_;
            digits_[static_cast<std::size_t>(a) * m_ + j] = static_cast<std::uint8_t>(c);
            negated += ((p_ - c) % p_) * pow_p_[j];
        }
        neg_[a] = negated;
    }
    if (q_ <= kTableFieldSize) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Element a = 0; a < q_; ++a)
            for (Element b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = add_slow(a, b);
                mul_table_[a * q_ + b] = mul_slow(a, b);
            }
    }
}

std::vector<unsigned> FieldSpec::coeffs(Element a) const {
    std::vector<unsigned> out(m_);
    for (unsigned j = 0; j < m_; ++j) out[j] = coeff(a, j);
    return out;
}

Element FieldSpec::from_coeffs(std::span<const unsigned> coeffs) const {
    if (coeffs.size() != m_) throw LengthMismatch("element needs " + std::to_string(m_) + " coefficients");
    Element a = 0;
    for (unsigned j = 0; j < m_; ++j) a += (coeffs[j] % p_) * pow_p_[j];
    return a;
}

Element FieldSpec::add_slow(Element a, Element b) const noexcept {
    Element r = 0;
    for (unsigned j = 0; j < m_; ++j) r += ((coeff(a, j) + coeff(b, j)) % p_) * pow_p_[j];
    return r;
}

Element FieldSpec::mul_slow(Element a, Element b) const noexcept {
    std::vector<unsigned> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        const unsigned ai = coeff(a, i);
        if (ai == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ai * coeff(b, j)) % p_;
    }
    poly_rem(prod, f_, p_);
    Element r = 0;
    for (std::size_t j = 0; j < prod.size(); ++j) r += prod[j] * pow_p_[j];
    return r;
}

Element FieldSpec::add(Element a, Element b) const noexcept {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
}

Element FieldSpec::neg(Element a) const noexcept { return neg_[a]; }

Element FieldSpec::sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }

Element FieldSpec::mul(Element a, Element b) const noexcept {
    return mul_table_.empty() ? mul_slow(a, b) : mul_table_[a * q_ + b];
}

Element FieldSpec::inv(Element a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    // a^(q-2)
    Element result = 1;
    Element base = a;
    for (unsigned e = q_ - 2; e != 0; e >>= 1) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::string FieldSpec::pretty(Element a) const {
    if (a == 0) return "0";
    std::string out;
    for (unsigned j = 0; j < m_; ++j) {
        const unsigned c = coeff(a, j);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (j == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'b';
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

Field make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> f) {
    if (!f) {
        if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
        auto def = default_polynomial(p, m);
        if (def.empty())
            throw DegreeMismatch("no built-in polynomial for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                 "); supply one explicitly");
        f = std::move(def);
    }
    return std::make_shared<const FieldSpec>(p, m, std::move(*f));
}

unsigned psi(const FieldSpec& field, long long k) noexcept {
    const long long p = field.p();
    return static_cast<unsigned>(((k % p) + p) % p);
}

// ---------------------------------------------------------------------------------------------
// Word

Word::Word(Field field, std::vector<Element> entries) : field_(std::move(field)), entries_(std::move(entries)) {
    for (auto e : entries_) {
        if (!field_->contains(e)) throw std::out_of_range("element " + std::to_string(e) + " outside the field");
        if (e != 0) ++weight_;
    }
}

Word Word::zero(Field field, std::size_t n) { return Word(std::move(field), std::vector<Element>(n, 0)); }

std::vector<std::size_t> Word::support() const {
    std::vector<std::size_t> out;
    out.reserve(weight_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0) out.push_back(i);
    return out;
}

Word Word::with(std::size_t i, Element value) const {
    auto copy = entries_;
    copy.at(i) = value;
    return Word(field_, std::move(copy));
}

bool GenSupport::contains(std::size_t i, std::size_t j) const {
    return std::find(pairs.begin(), pairs.end(), std::pair{i, j}) != pairs.end();
}

std::vector<unsigned> delta(const Word& v) {
    const auto& f = *v.field();
    std::vector<unsigned> out;
    out.reserve(v.size() * f.m());
    for (auto e : v.entries())
        for (unsigned j = 0; j < f.m(); ++j) out.push_back(f.coeff(e, j));
    return out;
}

Word nabla(const Field& field, std::size_t n, std::span<const unsigned> a) {
    const std::size_t m = field->m();
    if (a.size() != n * m)
        throw LengthMismatch("tuple of length " + std::to_string(a.size()) + " does not match n*m = " +
                             std::to_string(n * m));
    std::vector<Element> entries(n);
    for (std::size_t i = 0; i < n; ++i) entries[i] = field->from_coeffs(a.subspan(i * m, m));
    return Word(field, std::move(entries));
}

bool is_standard_form(const FieldSpec& field, std::span<const unsigned> a) {
    return std::all_of(a.begin(), a.end(), [&](unsigned x) { return x < field.p(); });
}

GenSupport gen_support(const Word& v) {
    GenSupport out;
    const auto& f = *v.field();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (unsigned j = 0; j < f.m(); ++j)
            if (f.coeff(v[i], j) != 0) out.pairs.emplace_back(i, j);
    }
    return out;
}

Word canonical_generator(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
    std::vector<Element> entries(n, 0);
    entries.at(i) = field->basis(static_cast<unsigned>(j));
    return Word(field, std::move(entries));
}

std::vector<Word> canonical_generators(const Field& field, std::size_t n) {
    std::vector<Word> out;
    out.reserve(n * field->m());
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned j = 0; j < field->m(); ++j) out.push_back(canonical_generator(field, n, i, j));
    return out;
}

void require_compatible(const Word& u, const Word& v) {
    if (u.size() != v.size()) throw SpecMismatch("word lengths differ");
    if (u.field() != v.field() && !(*u.field() == *v.field())) throw SpecMismatch("words over different fields");
}

Word add(const Word& u, const Word& v) {
    require_compatible(u, v);
    const auto& f = *u.field();
    std::vector<Element> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.add(u[i], v[i]);
    return Word(u.field(), std::move(out));
}

Word sub(const Word& u, const Word& v) {
    require_compatible(u, v);
    const auto& f = *u.field();
    std::vector<Element> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.sub(u[i], v[i]);
    return Word(u.field(), std::move(out));
}

Word scale(Element a, const Word& v) {
    const auto& f = *v.field();
    std::vector<Element> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(a, v[i]);
    return Word(v.field(), std::move(out));
}

Word drop_coordinate(const Word& v, std::size_t i) { return v.with(i, 0); }

bool wrap_free(const Word& v, std::size_t i, std::size_t j) noexcept {
    const auto& f = *v.field();
    return f.coeff(v[i], static_cast<unsigned>(j)) + 1 < f.p();
}

std::uint64_t pack(const Word& v) noexcept {
    const std::uint64_t q = v.field()->q();
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key * q + v[i];
    return key;
}

Word unpack(const Field& field, std::size_t n, std::uint64_t key) {
    const std::uint64_t q = field->q();
    std::vector<Element> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        entries[i] = static_cast<Element>(key % q);
        key /= q;
    }
    return Word(field, std::move(entries));
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

std::string to_string(const Word& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v.field()->pretty(v[i]);
    }
    return out + ")";
}

}  // namespace cosetlab
