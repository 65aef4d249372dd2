#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/ideal.hpp"

namespace cosetlab {

/// One witness c = v1 + e_ij - v2 of a leader codeword.
struct LeaderTriple {
    Word v1;
    std::size_t i = 0;
    std::size_t j = 0;
    Word v2;
};

struct LeaderSet {
    /// Distinct nonzero codewords, ascending in the weight compatible order.
    std::vector<Word> words;
    /// Parallel to words; empty unless built in audit mode.
    std::vector<std::vector<LeaderTriple>> provenance;

    bool contains(const Word& c) const;
    std::size_t max_weight() const;
    std::size_t size() const noexcept { return words.size(); }
};

/// L(C) from the ideal: w - v for every member w with a coordinate i in supp(w) such that w with i
/// cleared is a coset leader, and every leader v of w's coset other than w itself.
LeaderSet leader_codewords(const IdealRegistry& reg, bool audit = false);

/// L(C) straight from its definition, scanning every v1 in F_q^n and every wrap-free e_ij against a
/// reference coset table. Exhaustive; intended as an oracle.
LeaderSet leader_codewords_by_definition(const CosetTable& reference, const EnumerationCaps& caps = {});

struct TestSetVerdict {
    bool holds = true;
    /// First word (in packed order) that is neither a coset leader nor reducible by the set.
    std::optional<Word> counterexample;
};

/// Exhaustive check of the test-set property. D(0) membership comes from the reference table.
TestSetVerdict is_test_set(const CosetTable& reference, std::span<const Word> test_set, const EnumerationCaps& caps = {});

/// The least v in test_set (weight compatible order) with w_H(y - v) < w_H(y).
std::optional<Word> descent_step(const Word& y, std::span<const Word> test_set, OrderSpec order = {});

struct DecodeResult {
    Word error;
    Word codeword;
    std::size_t steps = 0;
};

/**
 * Gradient-like decoding: subtract reducing test-set codewords until none applies. The final error
 * must be a coset leader according to the table, otherwise NotReducible is thrown with the
 * stalled word.
 */
DecodeResult decode_gradient(const Word& y, std::span<const Word> test_set, const CosetTable& leaders);

/**
 * Exhaustive Voronoi geometry of a small code. Distances to the code are computed by enumerating
 * codewords, independently of any coset table. Word sets are bitmaps over packed keys.
 */
class VoronoiGeometry {
public:
    using WordSet = std::vector<bool>;

    explicit VoronoiGeometry(const LinearCode& code, const EnumerationCaps& caps = {});

    const LinearCode& code() const noexcept { return code_; }
    const std::vector<Word>& codewords() const noexcept { return codewords_; }
    std::uint64_t space_size() const noexcept { return space_; }

    /// d_H(y, C)
    std::size_t distance_to_code(const Word& y) const { return dist_[pack(y)]; }
    /// y ∈ D(c)
    bool voronoi_contains(const Word& c, const Word& y) const;
    WordSet region(const Word& c) const;
    /// X(A): words at distance exactly one from A.
    WordSet boundary_x(const WordSet& a) const;
    /// δ(A) = X(A) ∪ X(complement of A)
    WordSet boundary(const WordSet& a) const;
    /// Nonzero codewords whose region boundary meets the boundary of D(0).
    std::vector<Word> zero_neighbours() const;

    WordSet make_set(std::span<const Word> words) const;
    std::vector<Word> elements(const WordSet& s) const;
    static bool intersects(const WordSet& a, const WordSet& b);

private:
    LinearCode code_;
    std::uint64_t space_;
    std::vector<Word> codewords_;
    std::vector<std::uint8_t> dist_;
    std::vector<std::uint64_t> place_;
};

/// Single-shot form: enumerates the codewords of the code.
bool voronoi_contains(const LinearCode& code, const Word& c, const Word& y, const EnumerationCaps& caps = {});

}  // namespace cosetlab
