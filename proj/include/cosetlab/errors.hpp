#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/ideal.hpp"
#include "cosetlab/leaders.hpp"

namespace cosetlab {

/**
 * Correctable (E0) and uncorrectable (E1) errors for a fixed weight compatible order, with the
 * minimal uncorrectable (M1) and maximal correctable (M0) errors under ⊆₁.
 */
struct ErrorClassification {
    LinearCode code;
    OrderSpec order;
    /// Indexed by packed word: true for E0.
    std::vector<bool> correctable;
    /// The least word of each coset, ascending in the order.
    std::vector<Word> e0;
    std::vector<Word> m1;
    std::vector<Word> m0;

    std::uint64_t e0_size() const noexcept { return e0.size(); }
    std::uint64_t e1_size() const noexcept { return correctable.size() - e0.size(); }
    bool is_correctable(const Word& y) const { return correctable[pack(y)]; }
    bool in_m1(const Word& y) const;
};

/// Exhaustive classification over F_q^n.
ErrorClassification classify_errors(const LinearCode& code, OrderSpec order = {}, const EnumerationCaps& caps = {});

/// Every x with x ⊆₁ y, i.e. the restrictions of y to subsets of its support (including 0 and y).
std::vector<Word> subset1_predecessors(const Word& y);
/// Every z with y ⊆₁ z: y extended by arbitrary values outside supp(y).
std::vector<Word> subset1_successors(const Word& y);

/// H(y) = {c ∈ C : y - c ≺ y}
std::vector<Word> h_set(const LinearCode& code, const Word& y, OrderSpec order = {}, const EnumerationCaps& caps = {});
std::vector<Word> h_set(std::span<const Word> codewords, const Word& y, OrderSpec order);

/// ⊆₁-minimal u ⊆₁ c with u - c ≺ u. Throws ZeroCodeword for c = 0.
std::vector<Word> larger_halves(const Word& c, OrderSpec order = {});
/// Codeword-checked form. Throws SpecMismatch if c is not in the code.
std::vector<Word> larger_halves(const LinearCode& code, const Word& c, OrderSpec order = {});

/// Outcome of the three equivalent trial-set characterisations.
struct TrialSetReport {
    /// y ∈ E0 ⇔ y ⪯ y - c for every c in T.
    bool definition = false;
    /// Every y ∈ M1 has T ∩ H(y) ≠ ∅.
    bool covers_h = false;
    /// M1 ⊆ L_H(T).
    bool covers_larger_halves = false;
    std::optional<Word> definition_witness;

    bool consistent() const noexcept { return definition == covers_h && covers_h == covers_larger_halves; }
    bool is_trial_set() const noexcept { return definition && consistent(); }
};

TrialSetReport is_trial_set(const ErrorClassification& cls, std::span<const Word> trial, const EnumerationCaps& caps = {});

/// Leader codewords c having some y ∈ M1 ∩ L_H(c) with y - c ∈ E0. Throws NotTrialSet if the
/// result fails the trial-set check.
std::vector<Word> trial_set_from_leaders(const LeaderSet& leaders, const ErrorClassification& cls,
                                         const EnumerationCaps& caps = {});

/// For c in a trial set built above: the witness y, if any.
std::optional<Word> trial_witness(const Word& c, const ErrorClassification& cls);

/// Pairs (x, y) with x ⊂ y (coefficient-wise), equal generalized support, y ∈ E0 and x ∈ E1:
/// the monotone structure does not carry over from ⊆₁ to ⊂. Up to `limit` pairs.
std::vector<std::pair<Word, Word>> subset_monotonicity_breaks(const ErrorClassification& cls, std::size_t limit = 8);

}  // namespace cosetlab
