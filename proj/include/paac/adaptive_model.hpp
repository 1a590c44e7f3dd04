#pragma once

#include <cstdint>
#include <vector>

#include "paac/counts.hpp"

namespace paac {

// Online order-k model with add-one smoothing. At time t the predicted
// probability of symbol i in context j is (n(i|j)+1)/(n(j)+m), where the
// counts cover the first t symbols and a context occurrence at the very end
// is never counted. Before k symbols exist the prediction is uniform.
class AdaptiveModel {
public:
    AdaptiveModel(std::uint32_t alphabet, std::uint32_t order)
        : counts_(alphabet, order), m_(alphabet), k_(order) {}

    std::uint32_t alphabet() const { return m_; }
    std::uint32_t order() const { return k_; }
    std::uint64_t time() const { return t_; }
    bool warming_up() const { return t_ < k_; }

    // Add-one numerator of symbol s and shared denominator at this step.
    std::uint64_t numerator(Symbol s) const {
        const auto row = counts_.row(ctx_);
        return (row.counts ? row.counts[s] : 0) + 1;
    }

    std::uint64_t denominator() const {
        return counts_.row(ctx_).total + m_;
    }

    // Sum of add-one numerators of all symbols below s.
    std::uint64_t cum_below(Symbol s) const {
        const auto row = counts_.row(ctx_);
        std::uint64_t cum = s; // the +1 smoothing of each skipped symbol
        if (row.counts)
            for (Symbol i = 0; i < s; ++i) cum += row.counts[i];
        return cum;
    }

    // Largest s with cum_below(s) <= target; target must be < denominator().
    Symbol find_symbol(std::uint64_t target) const {
        const auto row = counts_.row(ctx_);
        std::uint64_t cum = 0;
        for (Symbol s = 0; s < m_; ++s) {
            cum += (row.counts ? row.counts[s] : 0) + 1;
            if (target < cum) return s;
        }
        return m_ - 1;
    }

    // Predicted distribution over the alphabet; entries are positive and
    // sum to 1 up to rounding.
    std::vector<double> predict() const {
        std::vector<double> p(m_);
        const double den = static_cast<double>(denominator());
        for (Symbol s = 0; s < m_; ++s)
            p[s] = static_cast<double>(numerator(s)) / den;
        return p;
    }

    void advance(Symbol s) {
        if (t_ >= k_) counts_.add(ctx_, s);
        ctx_ = counts_.packer().push(ctx_, s);
        ++t_;
    }

private:
    CountTable counts_;
    std::uint64_t ctx_ = 0;
    std::uint64_t t_ = 0;
    std::uint32_t m_;
    std::uint32_t k_;
};

} // namespace paac
