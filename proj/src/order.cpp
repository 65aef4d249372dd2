#include "cosetlab/order.hpp"

#include <numeric>
#include <stdexcept>

namespace cosetlab {

std::string_view to_string(TieBreak t) noexcept {
    switch (t) {
        case TieBreak::Lex: return "lex";
        case TieBreak::DegLex: return "deglex";
        case TieBreak::DegRevLex: return "degrevlex";
    }
    return "?";
}

TieBreak parse_tie_break(std::string_view name) {
    if (name == "lex") return TieBreak::Lex;
    if (name == "deglex") return TieBreak::DegLex;
    if (name == "degrevlex") return TieBreak::DegRevLex;
    throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

namespace {

std::strong_ordering lex(std::span<const unsigned> a, std::span<const unsigned> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

// Among equal degrees: the tuple with the larger entry at the last differing position is smaller.
std::strong_ordering revlex_tail(std::span<const unsigned> a, std::span<const unsigned> b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

unsigned long long degree(std::span<const unsigned> a) { return std::accumulate(a.begin(), a.end(), 0ull); }

}  // namespace

std::strong_ordering cmp_admissible(std::span<const unsigned> a, std::span<const unsigned> b, OrderSpec spec) {
    if (a.size() != b.size()) throw LengthMismatch("cannot compare tuples of different length");
    switch (spec.tie_break) {
        case TieBreak::Lex: return lex(a, b);
        case TieBreak::DegLex:
            if (auto c = degree(a) <=> degree(b); c != 0) return c;
            return lex(a, b);
        case TieBreak::DegRevLex:
            if (auto c = degree(a) <=> degree(b); c != 0) return c;
            return revlex_tail(a, b);
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_weight_compatible(const Word& x, const Word& y, OrderSpec spec) {
    require_compatible(x, y);
    if (auto c = x.weight() <=> y.weight(); c != 0) return c;
    const auto& f = *x.field();
    if (f.m() == 1) return cmp_admissible(x.entries(), y.entries(), spec);
    const auto dx = delta(x);
    const auto dy = delta(y);
    return cmp_admissible(dx, dy, spec);
}

bool subset(const Word& x, const Word& y) {
    require_compatible(x, y);
    const auto& f = *x.field();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (unsigned j = 0; j < f.m(); ++j)
            if (f.coeff(x[i], j) > f.coeff(y[i], j)) return false;
    return true;
}

bool subset1(const Word& x, const Word& y) {
    if (!subset(x, y)) return false;
    const auto& f = *x.field();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && f.sub(y[i], x[i]) != 0) return false;
    return true;
}

}  // namespace cosetlab
