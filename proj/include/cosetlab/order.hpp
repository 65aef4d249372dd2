#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "cosetlab/field.hpp"

namespace cosetlab {

/// Admissible order used to break ties between words of equal Hamming weight.
/// Coordinate (1,1) is the most significant, scanning the (i,j) grid i-major.
enum class TieBreak { Lex, DegLex, DegRevLex };

struct OrderSpec {
    TieBreak tie_break = TieBreak::Lex;
};

std::string_view to_string(TieBreak t) noexcept;
/// Accepts "lex", "deglex", "degrevlex". Throws std::invalid_argument otherwise.
TieBreak parse_tie_break(std::string_view name);

/// Admissible order on N^k. Throws LengthMismatch for tuples of different length.
std::strong_ordering cmp_admissible(std::span<const unsigned> a, std::span<const unsigned> b, OrderSpec spec);

/// Weight compatible order: Hamming weight first, then the admissible order on the
/// coefficient tuples. Equal only for identical words.
std::strong_ordering cmp_weight_compatible(const Word& x, const Word& y, OrderSpec spec);

/// x ⊂ y: every coefficient of x is at most the matching coefficient of y.
bool subset(const Word& x, const Word& y);

/// x ⊂ y and supp(x) ∩ supp(y - x) = ∅. Equivalently x_i ∈ {0, y_i} for every i.
bool subset1(const Word& x, const Word& y);

/// Strict-weak-ordering adaptor for the weight compatible order.
struct WeightOrderLess {
    OrderSpec spec;
    bool operator()(const Word& a, const Word& b) const { return cmp_weight_compatible(a, b, spec) < 0; }
};

}  // namespace cosetlab
