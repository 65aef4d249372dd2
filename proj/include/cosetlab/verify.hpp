#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/errors.hpp"
#include "cosetlab/ideal.hpp"
#include "cosetlab/leaders.hpp"

namespace cosetlab {

/// Tally of an exhaustive property check.
struct CheckCount {
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::optional<std::string> first_violation;

    bool ok() const noexcept { return violations == 0; }
    void record(bool holds, const std::string& what) {
        ++cases;
        if (holds) return;
        if (!first_violation) first_violation = what;
        ++violations;
    }
};

// Exhaustive property checks shared by the CLI `verify` command and the acceptance suite.
// Every function enumerates the full word space under the reference table's caps.

/// Leader x, x' agreeing with x on supp(x'): x' must be a leader.
CheckCount check_leader_restrictions(const CosetTable& reference, const EnumerationCaps& caps = {});
/// Leader x, i in supp(x), x' agreeing with x on supp(x') \ {i}: w(x') <= w(x' + C) + 1.
CheckCount check_ancestor_weight_bound(const CosetTable& reference, const EnumerationCaps& caps = {});
/// Every w with w - w_i a leader for some i lies in the ideal.
CheckCount check_ideal_closure(const IdealRegistry& reg, const CosetTable& reference, const EnumerationCaps& caps = {});
/// Ideal coset records equal the reference (weights and leader sets) and every leader is a member.
CheckCount check_ideal_completeness(const IdealRegistry& reg, const CosetTable& reference);
/// Every nonzero member has a wrap-free predecessor w - e_ij in the ideal.
CheckCount check_weak_order_ideal(const IdealRegistry& reg);
/// Members were processed in ascending weight compatible order.
CheckCount check_processing_order(const IdealRegistry& reg);
/// w - e_ij ≺ w for every word and every (i,j) in its generalized support.
CheckCount check_order_monotone(const Field& field, std::size_t n, OrderSpec order, const EnumerationCaps& caps = {});

CheckCount check_leader_weight_bound(const LeaderSet& leaders, std::size_t rho);
/// X(D(0)) ∩ (D(w) ∪ X(D(w))) ≠ ∅ for every leader codeword w.
CheckCount check_leader_boundary(const VoronoiGeometry& geom, const LeaderSet& leaders);
/// X(D(0)) ∩ D(w) ≠ ∅ implies w ∈ L(C), over all codewords.
CheckCount check_leader_converse(const VoronoiGeometry& geom, const LeaderSet& leaders);
/// Leader codewords w with X(D(0)) ∩ D(w) = ∅. Reported, not asserted.
std::vector<Word> leaders_missing_strong_boundary(const VoronoiGeometry& geom, const LeaderSet& leaders);
/// decode_gradient(y, T) lands on a word of coset weight for every y.
CheckCount check_decoding(const CosetTable& reference, const std::vector<Word>& test_set, const EnumerationCaps& caps = {});

/// H(y) = ∅ ⇔ y ∈ E0.
CheckCount check_h_characterisation(const ErrorClassification& cls, const EnumerationCaps& caps = {});
/// x ⊆₁ y: x ∈ E1 ⇒ y ∈ E1.
CheckCount check_subset1_monotone(const ErrorClassification& cls, const EnumerationCaps& caps = {});
/// w(c) <= 2 w(u) <= w(c) + 2 and u ∈ E1 for every larger half u of every nonzero codeword c.
CheckCount check_larger_halves(const ErrorClassification& cls, const EnumerationCaps& caps = {});

/// Seeded random subsets of C \ {0} and of L(C) used as trial-set candidates.
std::vector<std::vector<Word>> random_candidate_sets(const LinearCode& code, const LeaderSet& leaders,
                                                     std::size_t count, std::uint64_t seed,
                                                     const EnumerationCaps& caps = {});

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Informational rows never affect the exit status.
    bool informational = false;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    OrderSpec order;
    EnumerationCaps caps;
    std::uint64_t seed = 1;
    std::size_t random_trial_sets = 100;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Runs every invariant suite against one code.
VerificationReport verify_code(const LinearCode& code, const VerifyOptions& options = {});

}  // namespace cosetlab
