// Independent reference computations for the test suites. These deliberately
// avoid the library's count tables, context packing and DP: naive containers
// and direct formula evaluation only.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "paac/chain.hpp"
#include "paac/histogram.hpp"

namespace oracle {

using paac::Symbol;
using paac::SymbolChain;

using ContextKey = std::vector<Symbol>;

struct NaiveCounts {
    std::map<ContextKey, std::map<Symbol, std::uint64_t>> transitions;
    std::map<ContextKey, std::uint64_t> totals;
};

inline NaiveCounts naive_count(const SymbolChain& chain, std::uint32_t k) {
    NaiveCounts counts;
    const auto& x = chain.symbols;
    for (std::size_t t = k; t < x.size(); ++t) {
        ContextKey ctx(x.begin() + static_cast<std::ptrdiff_t>(t - k),
                       x.begin() + static_cast<std::ptrdiff_t>(t));
        counts.transitions[ctx][x[t]]++;
        counts.totals[ctx]++;
    }
    return counts;
}

// Codelength as a per-position log-loss sum: k*log2(m) plus
// -log2 thetahat(x_t | context_t) over positions t > k, with thetahat taken
// from the full-chain maximum-likelihood fit.
inline double per_position_ml_bits(const SymbolChain& chain, std::uint32_t k) {
    const NaiveCounts counts = naive_count(chain, k);
    const auto& x = chain.symbols;
    double bits = static_cast<double>(k) * std::log2(chain.alphabet_size);
    for (std::size_t t = k; t < x.size(); ++t) {
        ContextKey ctx(x.begin() + static_cast<std::ptrdiff_t>(t - k),
                       x.begin() + static_cast<std::ptrdiff_t>(t));
        const double theta =
            static_cast<double>(counts.transitions.at(ctx).at(x[t])) /
            static_cast<double>(counts.totals.at(ctx));
        bits -= std::log2(theta);
    }
    return bits;
}

// Exact probability the add-one adaptive model assigns to the whole chain
// (uniform factors while fewer than k symbols exist).
inline mpq_class adaptive_chain_probability(const SymbolChain& chain,
                                            std::uint32_t k) {
    const std::uint32_t m = chain.alphabet_size;
    const auto& x = chain.symbols;
    NaiveCounts counts;
    mpq_class prob{1};
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (t < k) {
            prob /= static_cast<unsigned long>(m);
        } else {
            ContextKey ctx(x.begin() + static_cast<std::ptrdiff_t>(t - k),
                           x.begin() + static_cast<std::ptrdiff_t>(t));
            const std::uint64_t c = counts.transitions[ctx][x[t]];
            const std::uint64_t total = counts.totals[ctx];
            prob *= mpq_class(static_cast<unsigned long>(c + 1),
                              static_cast<unsigned long>(total + m));
            counts.transitions[ctx][x[t]]++;
            counts.totals[ctx]++;
        }
    }
    return prob;
}

// Eq.-style direct histogram criterion from the raw sample: bins each point
// by linear search over the cut positions.
inline double naive_histogram_criterion(const std::vector<double>& sample,
                                        double a, double b, std::uint32_t R,
                                        const std::vector<std::uint32_t>& cuts) {
    const std::size_t m = cuts.size() - 1;
    std::vector<std::uint64_t> nj(m, 0);
    for (double v : sample) {
        for (std::size_t j = 0; j < m; ++j) {
            const double lo = a + cuts[j] * (b - a) / R;
            const double hi = a + cuts[j + 1] * (b - a) / R;
            const bool last = (j + 1 == m);
            if (v >= lo && (v < hi || (last && v <= hi))) {
                nj[j]++;
                break;
            }
        }
    }
    const double n = static_cast<double>(sample.size());
    double crit = (static_cast<double>(m) - 1.0) / 2.0 * std::log2(n);
    for (std::size_t j = 0; j < m; ++j) {
        if (nj[j] == 0) continue;
        const double lj =
            static_cast<double>(cuts[j + 1] - cuts[j]) * (b - a) / R;
        crit -= static_cast<double>(nj[j]) *
                std::log2(static_cast<double>(nj[j]) / (n * lj));
    }
    return crit;
}

// Exhaustive minimizer over all 2^(R-1) grid partitions, accumulating the
// exact per-interval DP costs left to right and breaking ties the same way
// dp_select documents: fewer intervals first, then lexicographic cuts.
struct BruteForceResult {
    double criterion = 0.0;
    std::vector<std::uint32_t> cuts;
};

inline BruteForceResult brute_force_histogram(const paac::HistogramGrid& grid) {
    const std::uint32_t R = grid.cells();
    const double tail =
        -0.5 * std::log2(static_cast<double>(grid.sample_size()));

    BruteForceResult best;
    bool have_best = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (R - 1));
         ++mask) {
        std::vector<std::uint32_t> cuts{0};
        for (std::uint32_t t = 1; t < R; ++t)
            if (mask & (std::uint64_t{1} << (t - 1))) cuts.push_back(t);
        cuts.push_back(R);

        double cost = 0.0;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j)
            cost += paac::histogram_interval_cost(grid, cuts[j], cuts[j + 1]);
        const double crit = cost + tail;

        bool better = false;
        if (!have_best) {
            better = true;
        } else if (crit != best.criterion) {
            better = crit < best.criterion;
        } else if (cuts.size() != best.cuts.size()) {
            better = cuts.size() < best.cuts.size();
        } else {
            better = cuts < best.cuts;
        }
        if (better) {
            best.criterion = crit;
            best.cuts = cuts;
            have_best = true;
        }
    }
    return best;
}

} // namespace oracle
