#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "paac/chain.hpp"
#include "paac/errors.hpp"

namespace paac {

// Packs the last k symbols into a 64-bit context key, each symbol occupying
// bit_width(m-1) bits. Rejects models whose packed context cannot fit.
class ContextPacker {
public:
    ContextPacker(std::uint32_t alphabet, std::uint32_t order)
        : m_(alphabet), k_(order) {
        if (m_ == 0) throw InvalidArgument("alphabet size must be >= 1");
        bits_ = (m_ > 1) ? std::bit_width(m_ - 1) : 0;
        const std::uint64_t total_bits =
            static_cast<std::uint64_t>(bits_) * k_;
        if (total_bits > 62)
            throw ModelTooLarge("context of " + std::to_string(k_) +
                                " symbols over alphabet " + std::to_string(m_));
        key_bits_ = static_cast<std::uint32_t>(total_bits);
        mask_ = key_bits_ ? ((std::uint64_t{1} << key_bits_) - 1) : 0;
    }

    std::uint64_t push(std::uint64_t key, Symbol s) const {
        return ((key << bits_) | s) & mask_;
    }

    std::uint32_t key_bits() const { return key_bits_; }
    std::uint32_t order() const { return k_; }
    std::uint32_t alphabet() const { return m_; }

private:
    std::uint32_t m_;
    std::uint32_t k_;
    std::uint32_t bits_ = 0;
    std::uint32_t key_bits_ = 0;
    std::uint64_t mask_ = 0;
};

// Occurrence counts n(i|j) and context totals n(j), keyed by packed context.
// Dense storage for small models, per-context rows allocated on demand
// otherwise. Counts are 64-bit; no rescaling.
class CountTable {
public:
    struct RowView {
        const std::uint64_t* counts; // nullptr means all-zero row
        std::uint64_t total;
    };

    CountTable(std::uint32_t alphabet, std::uint32_t order)
        : packer_(alphabet, order), m_(alphabet) {
        const std::uint64_t slots =
            (std::uint64_t{1} << packer_.key_bits()) * m_;
        dense_ = slots <= kDenseLimit;
        if (dense_) {
            counts_.assign(slots, 0);
            totals_.assign(std::uint64_t{1} << packer_.key_bits(), 0);
        }
    }

    const ContextPacker& packer() const { return packer_; }
    std::uint32_t alphabet() const { return m_; }
    std::uint32_t order() const { return packer_.order(); }

    void add(std::uint64_t ctx, Symbol s) {
        if (dense_) {
            counts_[ctx * m_ + s]++;
            totals_[ctx]++;
        } else {
            Row& row = rows_[ctx];
            if (row.counts.empty()) row.counts.assign(m_, 0);
            row.counts[s]++;
            row.total++;
        }
    }

    std::uint64_t count(std::uint64_t ctx, Symbol s) const {
        if (dense_) return counts_[ctx * m_ + s];
        auto it = rows_.find(ctx);
        return it == rows_.end() ? 0 : it->second.counts[s];
    }

    std::uint64_t total(std::uint64_t ctx) const {
        if (dense_) return totals_[ctx];
        auto it = rows_.find(ctx);
        return it == rows_.end() ? 0 : it->second.total;
    }

    RowView row(std::uint64_t ctx) const {
        if (dense_) return {counts_.data() + ctx * m_, totals_[ctx]};
        auto it = rows_.find(ctx);
        if (it == rows_.end()) return {nullptr, 0};
        return {it->second.counts.data(), it->second.total};
    }

    // f(ctx, total) over contexts with total > 0.
    template <class F>
    void for_each_context(F&& f) const {
        if (dense_) {
            for (std::uint64_t ctx = 0; ctx < totals_.size(); ++ctx)
                if (totals_[ctx] > 0) f(ctx, totals_[ctx]);
        } else {
            for (const auto& [ctx, row] : rows_)
                if (row.total > 0) f(ctx, row.total);
        }
    }

    // f(ctx, symbol, count) over entries with count > 0.
    template <class F>
    void for_each_transition(F&& f) const {
        if (dense_) {
            for (std::uint64_t ctx = 0; ctx < totals_.size(); ++ctx) {
                if (totals_[ctx] == 0) continue;
                for (Symbol s = 0; s < m_; ++s)
                    if (std::uint64_t c = counts_[ctx * m_ + s]; c > 0)
                        f(ctx, s, c);
            }
        } else {
            for (const auto& [ctx, row] : rows_) {
                for (Symbol s = 0; s < m_; ++s)
                    if (row.counts[s] > 0) f(ctx, s, row.counts[s]);
            }
        }
    }

private:
    struct Row {
        std::vector<std::uint64_t> counts;
        std::uint64_t total = 0;
    };

    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

    ContextPacker packer_;
    std::uint32_t m_;
    bool dense_;
    std::vector<std::uint64_t> counts_; // dense: ctx * m + symbol
    std::vector<std::uint64_t> totals_; // dense: ctx
    std::unordered_map<std::uint64_t, Row> rows_; // sparse
};

// Batch transition counts of a chain at order k. A context occurrence at the
// very end of the chain (with no successor) is not counted in n(j).
struct TransitionCounts {
    CountTable table;
    std::uint64_t chain_length; // n

    std::uint32_t order() const { return table.order(); }
    std::uint32_t alphabet() const { return table.alphabet(); }
};

TransitionCounts count_transitions(const SymbolChain& chain, std::uint32_t k);

} // namespace paac
