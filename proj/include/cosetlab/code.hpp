#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/field.hpp"
#include "cosetlab/order.hpp"

namespace cosetlab {

/// Guardrails for exhaustive enumeration.
struct EnumerationCaps {
    /// Largest word space q^n (or codeword space q^k) an oracle may enumerate.
    std::uint64_t words = std::uint64_t{1} << 24;
    /// Largest number of cosets q^(n-k) a coset table may hold.
    std::uint64_t cosets = std::uint64_t{1} << 22;
};

using Matrix = std::vector<std::vector<Element>>;

/**
 * A k-dimensional subspace of F_q^n given by its generator matrix.
 *
 * The generator is kept in reduced row echelon form; the parity-check matrix is derived from it,
 * and syndromes are packed into integers in [0, q^(n-k)).
 */
class LinearCode {
public:
    /// Throws RankDeficient when the rows are linearly dependent and SpecMismatch on ragged rows
    /// or entries outside the field.
    LinearCode(Field field, std::size_t n, Matrix generator);

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return generator_.size(); }
    std::size_t redundancy() const noexcept { return n_ - k(); }
    unsigned q() const noexcept { return field_->q(); }
    const Matrix& generator() const noexcept { return generator_; }
    const Matrix& parity_check() const noexcept { return parity_check_; }

    /// Number of cosets q^(n-k). Throws TooLarge beyond 2^63.
    std::uint64_t coset_count() const;

    Word syndrome(const Word& y) const;
    std::uint64_t syndrome_key(const Word& y) const;
    bool contains(const Word& y) const { return syndrome_key(y) == 0; }

    /// Codeword for a message of length k.
    Word encode(std::span<const Element> message) const;
    /// All q^k codewords in message order. Throws TooLarge above caps.words.
    std::vector<Word> codewords(const EnumerationCaps& caps = {}) const;

    Word zero() const { return Word::zero(field_, n_); }

private:
    Field field_;
    std::size_t n_;
    Matrix generator_;
    Matrix parity_check_;
};

/// Convenience: infers n from the first row. Use the LinearCode constructor for k = 0.
LinearCode make_code(const Field& field, const Matrix& generator);

/// Calls visit(word) for every word of F_q^n in packed-key order. Throws TooLarge above caps.words.
void for_each_word(const Field& field, std::size_t n, const EnumerationCaps& caps,
                   const std::function<void(const Word&)>& visit);

/// Exact minimum distance by codeword enumeration. Returns n + 1 for the zero code.
std::size_t min_distance(const LinearCode& code, const EnumerationCaps& caps = {});
/// floor((d - 1) / 2)
std::size_t error_capability(std::size_t d) noexcept;

struct CosetRecord {
    std::size_t weight = 0;
    /// All minimum-weight words of the coset, ascending in the weight compatible order.
    std::vector<Word> leaders;
    /// The least leader in the weight compatible order (front of leaders).
    const Word& canonical() const { return leaders.front(); }
};

/**
 * Per-syndrome coset records, indexed densely by packed syndrome.
 */
class CosetTable {
public:
    CosetTable(LinearCode code, OrderSpec order);

    const LinearCode& code() const noexcept { return code_; }
    OrderSpec order() const noexcept { return order_; }

    std::uint64_t capacity() const noexcept { return records_.size(); }
    std::uint64_t size() const noexcept { return filled_; }
    bool complete() const noexcept { return filled_ == records_.size(); }

    /// nullptr when the syndrome has not been seen.
    const CosetRecord* find(std::uint64_t syndrome_key) const;
    const CosetRecord* find(const Word& y) const { return find(code_.syndrome_key(y)); }
    /// Throws std::out_of_range for an unseen syndrome.
    const CosetRecord& at(const Word& y) const;

    /// Coset weight w_H(y + C).
    std::size_t coset_weight(const Word& y) const { return at(y).weight; }
    /// y ∈ CL(C).
    bool is_leader(const Word& y) const;
    const std::vector<Word>& leaders_of(const Word& y) const { return at(y).leaders; }

    /// Max coset weight over all cosets. Throws std::logic_error if incomplete.
    std::size_t covering_radius() const;

    /// Every leader of every coset, grouped by syndrome in ascending key order.
    std::vector<Word> all_leaders() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t s = 0; s < records_.size(); ++s)
            if (records_[s]) f(s, *records_[s]);
    }

    /// Insert a new coset record. Used by the builders.
    void open(std::uint64_t syndrome_key, Word leader);
    /// Append an additional leader of equal weight.
    void add_leader(std::uint64_t syndrome_key, Word leader);
    /// Re-sort leader lists in the weight compatible order.
    void normalize();

private:
    LinearCode code_;
    OrderSpec order_;
    std::vector<std::optional<CosetRecord>> records_;
    std::uint64_t filled_ = 0;
};

/// Reference table by enumerating all of F_q^n.
CosetTable brute_force_coset_table(const LinearCode& code, OrderSpec order, const EnumerationCaps& caps = {});

std::size_t covering_radius(const CosetTable& table);

/**
 * Plain-text code file:
 *   line 1: p m n k
 *   line 2: m+1 coefficients of f, ascending (only when m > 1)
 *   k lines of n packed elements in [0, q-1]
 * '#' starts a comment.
 */
LinearCode parse_code(std::istream& in, const std::string& source = "<input>");
LinearCode load_code(const std::string& path);
std::string format_code(const LinearCode& code);

}  // namespace cosetlab
