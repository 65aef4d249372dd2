#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cosetlab/code.hpp"
#include "cosetlab/order.hpp"

namespace cosetlab {

struct IdealStats {
    std::size_t words_processed = 0;
    std::size_t queue_peak = 0;
    std::size_t criterion1_words = 0;
    std::size_t criterion2_words = 0;
    /// Members whose weight exceeds their coset weight by two or more; kept but never expanded.
    std::size_t overweight_members = 0;
};

/// How a member entered the ideal: parent + e_ij under the given criterion (0 for the seed).
struct MemberOrigin {
    std::uint64_t parent = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    int criterion = 0;
};

/**
 * The weak order ideal O(C) of the coset leaders, together with the coset table it produced.
 *
 * Members are kept in processing order, which is ascending in the weight compatible order.
 */
class IdealRegistry {
public:
    const LinearCode& code() const noexcept { return table_.code(); }
    OrderSpec order() const noexcept { return table_.order(); }
    const CosetTable& table() const noexcept { return table_; }
    const IdealStats& stats() const noexcept { return stats_; }

    const std::vector<Word>& members() const noexcept { return members_; }
    bool contains(const Word& w) const { return keys_.contains(pack(w)); }

    /// Only filled when built in audit mode.
    const std::unordered_map<std::uint64_t, MemberOrigin>& origins() const noexcept { return origins_; }
    std::optional<MemberOrigin> origin(const Word& w) const;

    bool is_coset_leader(const Word& y) const { return table_.is_leader(y); }
    const std::vector<Word>& coset_leaders_of(const Word& y) const { return table_.leaders_of(y); }

private:
    explicit IdealRegistry(CosetTable table) : table_(std::move(table)) {}
    friend IdealRegistry build_ideal(const LinearCode&, OrderSpec, const EnumerationCaps&, bool);

    CosetTable table_;
    std::vector<Word> members_;
    std::unordered_set<std::uint64_t> keys_;
    std::unordered_map<std::uint64_t, MemberOrigin> origins_;
    IdealStats stats_;
};

/**
 * Best-first construction of O(C) from the zero word.
 *
 * Words are popped in the weight compatible order. A popped coset leader spawns every wrap-free
 * v + e_ij (criterion 1); a word one heavier than its coset spawns v + e_ij for i in supp(v)
 * provided v with coordinate i cleared is a coset leader (criterion 2).
 *
 * Throws TooLarge when q^(n-k) exceeds caps.cosets, InternalInconsistency if a popped word is
 * lighter than its recorded coset weight.
 */
IdealRegistry build_ideal(const LinearCode& code, OrderSpec order = {}, const EnumerationCaps& caps = {},
                          bool audit = false);

bool is_coset_leader(const IdealRegistry& reg, const Word& y);
const std::vector<Word>& coset_leaders_of(const IdealRegistry& reg, const Word& y);

}  // namespace cosetlab
