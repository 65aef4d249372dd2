#include "cosetlab/leaders.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cosetlab {

namespace {

// Collects codewords keyed by packed value, keeping provenance when requested.
class LeaderCollector {
public:
    LeaderCollector(OrderSpec order, bool audit) : order_(order), audit_(audit) {}

    void add(Word c, const LeaderTriple& why) {
        const auto key = pack(c);
        auto [it, fresh] = index_.try_emplace(key, words_.size());
        if (fresh) {
            words_.push_back(std::move(c));
            provenance_.emplace_back();
        }
        if (audit_) provenance_[it->second].push_back(why);
    }

    LeaderSet finish() && {
        std::vector<std::size_t> perm(words_.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        const WeightOrderLess less{order_};
        std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return less(words_[a], words_[b]); });
        LeaderSet out;
        for (auto p : perm) {
            out.words.push_back(std::move(words_[p]));
            if (audit_) out.provenance.push_back(std::move(provenance_[p]));
        }
        return out;
    }

private:
    OrderSpec order_;
    bool audit_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<Word> words_;
    std::vector<std::vector<LeaderTriple>> provenance_;
};

}  // namespace

bool LeaderSet::contains(const Word& c) const { return std::find(words.begin(), words.end(), c) != words.end(); }

std::size_t LeaderSet::max_weight() const {
    std::size_t w = 0;
    for (const auto& c : words) w = std::max(w, c.weight());
    return w;
}

LeaderSet leader_codewords(const IdealRegistry& reg, bool audit) {
    const auto& table = reg.table();
    const auto& field = reg.code().field();
    LeaderCollector out(reg.order(), audit);
    for (const auto& w : reg.members()) {
        std::optional<std::size_t> anchor;
        for (auto i : w.support()) {
            if (table.is_leader(drop_coordinate(w, i))) {
                anchor = i;
                break;
            }
        }
        if (!anchor) continue;
        const auto& leaders = table.leaders_of(w);
        if (leaders.size() == 1 && leaders.front() == w) continue;

        LeaderTriple why;
        if (audit) {
            // w = v1 + e_ij with (i, j) in the generalized support of w at the anchor coordinate.
            unsigned j = 0;
            while (field->coeff(w[*anchor], j) == 0) ++j;
            why.v1 = w.with(*anchor, field->sub(w[*anchor], field->basis(j)));
            why.i = *anchor;
            why.j = j;
        }
        for (const auto& v : leaders) {
            if (v == w) continue;
            if (audit) why.v2 = v;
            out.add(sub(w, v), why);
        }
    }
    return std::move(out).finish();
}

LeaderSet leader_codewords_by_definition(const CosetTable& reference, const EnumerationCaps& caps) {
    const auto& code = reference.code();
    const auto& field = code.field();
    LeaderCollector out(reference.order(), true);
    for_each_word(field, code.n(), caps, [&](const Word& v1) {
        for (std::size_t i = 0; i < code.n(); ++i) {
            if (!reference.is_leader(drop_coordinate(v1, i))) continue;
            for (unsigned j = 0; j < field->m(); ++j) {
                if (!wrap_free(v1, i, j)) continue;
                const Word x = v1.with(i, field->add(v1[i], field->basis(j)));
                for (const auto& v2 : reference.leaders_of(x)) {
                    Word c = sub(x, v2);
                    if (c.is_zero()) continue;
                    out.add(std::move(c), LeaderTriple{v1, i, j, v2});
                }
            }
        }
    });
    return std::move(out).finish();
}

TestSetVerdict is_test_set(const CosetTable& reference, std::span<const Word> test_set, const EnumerationCaps& caps) {
    const auto& code = reference.code();
    TestSetVerdict verdict;
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        if (!verdict.holds) return;
        if (reference.coset_weight(y) == y.weight()) return;
        const bool reducible = std::any_of(test_set.begin(), test_set.end(),
                                           [&](const Word& v) { return sub(y, v).weight() < y.weight(); });
        if (!reducible) {
            verdict.holds = false;
            verdict.counterexample = y;
        }
    });
    return verdict;
}

std::optional<Word> descent_step(const Word& y, std::span<const Word> test_set, OrderSpec order) {
    std::optional<Word> best;
    for (const auto& v : test_set) {
        if (sub(y, v).weight() >= y.weight()) continue;
        if (!best || cmp_weight_compatible(v, *best, order) < 0) best = v;
    }
    return best;
}

DecodeResult decode_gradient(const Word& y, std::span<const Word> test_set, const CosetTable& leaders) {
    DecodeResult result{y, Word::zero(y.field(), y.size()), 0};
    while (auto v = descent_step(result.error, test_set, leaders.order())) {
        result.error = sub(result.error, *v);
        ++result.steps;
    }
    if (leaders.coset_weight(result.error) != result.error.weight())
        throw NotReducible("descent stalled at " + to_string(result.error) + ", which is not a coset leader");
    result.codeword = sub(y, result.error);
    return result;
}

// ---------------------------------------------------------------------------------------------
// Voronoi geometry

VoronoiGeometry::VoronoiGeometry(const LinearCode& code, const EnumerationCaps& caps) : code_(code) {
    const auto total = checked_power(code.q(), code.n());
    if (!total || *total > caps.words) throw TooLarge("q^n exceeds the enumeration cap of " + std::to_string(caps.words));
    space_ = *total;
    codewords_ = code.codewords(caps);
    for (std::size_t i = 0; i < code.n(); ++i) place_.push_back(*checked_power(code.q(), i));
    dist_.assign(space_, 0);
    std::uint64_t key = 0;
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        std::size_t best = code.n();
        for (const auto& c : codewords_) best = std::min(best, sub(y, c).weight());
        dist_[key++] = static_cast<std::uint8_t>(best);
    });
}

bool VoronoiGeometry::voronoi_contains(const Word& c, const Word& y) const {
    return sub(y, c).weight() == distance_to_code(y);
}

VoronoiGeometry::WordSet VoronoiGeometry::region(const Word& c) const {
    WordSet out(space_, false);
    for (std::uint64_t key = 0; key < space_; ++key)
        out[key] = voronoi_contains(c, unpack(code_.field(), code_.n(), key));
    return out;
}

VoronoiGeometry::WordSet VoronoiGeometry::boundary_x(const WordSet& a) const {
    const std::uint64_t q = code_.q();
    WordSet out(space_, false);
    for (std::uint64_t key = 0; key < space_; ++key) {
        if (a[key]) continue;
        bool hit = false;
        for (std::size_t i = 0; i < place_.size() && !hit; ++i) {
            const std::uint64_t digit = (key / place_[i]) % q;
            const std::uint64_t base = key - digit * place_[i];
            for (std::uint64_t v = 0; v < q && !hit; ++v)
                if (v != digit && a[base + v * place_[i]]) hit = true;
        }
        out[key] = hit;
    }
    return out;
}

VoronoiGeometry::WordSet VoronoiGeometry::boundary(const WordSet& a) const {
    WordSet complement(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) complement[i] = !a[i];
    auto out = boundary_x(a);
    const auto other = boundary_x(complement);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] || other[i];
    return out;
}

std::vector<Word> VoronoiGeometry::zero_neighbours() const {
    const auto zero_boundary = boundary(region(code_.zero()));
    std::vector<Word> out;
    for (const auto& z : codewords_)
        if (!z.is_zero() && intersects(boundary(region(z)), zero_boundary)) out.push_back(z);
    return out;
}

VoronoiGeometry::WordSet VoronoiGeometry::make_set(std::span<const Word> words) const {
    WordSet out(space_, false);
    for (const auto& w : words) out[pack(w)] = true;
    return out;
}

std::vector<Word> VoronoiGeometry::elements(const WordSet& s) const {
    std::vector<Word> out;
    for (std::uint64_t key = 0; key < s.size(); ++key)
        if (s[key]) out.push_back(unpack(code_.field(), code_.n(), key));
    return out;
}

bool VoronoiGeometry::intersects(const WordSet& a, const WordSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

bool voronoi_contains(const LinearCode& code, const Word& c, const Word& y, const EnumerationCaps& caps) {
    const std::size_t to_c = sub(y, c).weight();
    for (const auto& other : code.codewords(caps))
        if (!(other == c) && sub(y, other).weight() < to_c) return false;
    return true;
}

}  // namespace cosetlab
