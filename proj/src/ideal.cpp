#include "cosetlab/ideal.hpp"

#include <queue>

namespace cosetlab {

std::optional<MemberOrigin> IdealRegistry::origin(const Word& w) const {
    if (auto it = origins_.find(pack(w)); it != origins_.end()) return it->second;
    return std::nullopt;
}

namespace {

struct Greater {
    OrderSpec spec;
    bool operator()(const Word& a, const Word& b) const { return cmp_weight_compatible(a, b, spec) > 0; }
};

}  // namespace

IdealRegistry build_ideal(const LinearCode& code, OrderSpec order, const EnumerationCaps& caps, bool audit) {
    if (code.coset_count() > caps.cosets)
        throw TooLarge("q^(n-k) = " + std::to_string(code.coset_count()) + " exceeds the coset cap of " +
                       std::to_string(caps.cosets));

    IdealRegistry reg{CosetTable(code, order)};
    auto& table = reg.table_;
    auto& stats = reg.stats_;
    const auto& field = code.field();
    const std::size_t n = code.n();
    const unsigned m = field->m();

    std::priority_queue<Word, std::vector<Word>, Greater> queue{Greater{order}};
    auto enqueue = [&](Word w, std::uint64_t parent, std::size_t i, std::size_t j, int criterion) {
        const auto key = pack(w);
        if (!reg.keys_.insert(key).second) return;
        if (audit) reg.origins_.emplace(key, MemberOrigin{parent, i, j, criterion});
        queue.push(std::move(w));
        stats.queue_peak = std::max(stats.queue_peak, queue.size());
    };
    enqueue(code.zero(), 0, 0, 0, 0);

    std::size_t last_weight = 0;
    while (!queue.empty()) {
        Word v = queue.top();
        queue.pop();
        ++stats.words_processed;
        const std::size_t w = v.weight();
        if (w < last_weight) throw InternalInconsistency("pop order is not monotone in weight");
        last_weight = w;

        const auto syn = code.syndrome_key(v);
        const auto* rec = table.find(syn);
        std::size_t coset_weight = w;
        if (!rec) {
            table.open(syn, v);
        } else if (w == rec->weight) {
            table.add_leader(syn, v);
            coset_weight = rec->weight;
        } else if (w < rec->weight) {
            throw InternalInconsistency("word " + to_string(v) + " is lighter than its recorded coset weight");
        } else {
            coset_weight = rec->weight;
        }
        const auto key = pack(v);

        if (w == coset_weight) {
            ++stats.criterion1_words;
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned j = 0; j < m; ++j)
                    if (wrap_free(v, i, j)) enqueue(v.with(i, field->add(v[i], field->basis(j))), key, i, j, 1);
        } else if (w == coset_weight + 1) {
            ++stats.criterion2_words;
            for (std::size_t i : v.support()) {
                const Word dropped = drop_coordinate(v, i);
                const auto* drec = table.find(dropped);
                // dropped is strictly lighter, so its coset must already be open.
                if (!drec) throw InternalInconsistency("coset of " + to_string(dropped) + " not yet discovered");
                if (drec->weight != dropped.weight()) continue;
                for (unsigned j = 0; j < m; ++j)
                    if (wrap_free(v, i, j)) enqueue(v.with(i, field->add(v[i], field->basis(j))), key, i, j, 2);
            }
        } else {
            ++stats.overweight_members;
        }
        reg.members_.push_back(std::move(v));
    }

    if (!table.complete())
        throw InternalInconsistency("ideal reached " + std::to_string(table.size()) + " of " +
                                    std::to_string(table.capacity()) + " cosets");
    return reg;
}

bool is_coset_leader(const IdealRegistry& reg, const Word& y) { return reg.is_coset_leader(y); }

const std::vector<Word>& coset_leaders_of(const IdealRegistry& reg, const Word& y) { return reg.coset_leaders_of(y); }

}  // namespace cosetlab
