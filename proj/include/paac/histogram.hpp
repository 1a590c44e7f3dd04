#pragma once

#include <cstdint>
#include <vector>

#include "paac/errors.hpp"

namespace paac {

// Regular grid of R elementary cells over [a, b] with per-cell prefix
// counts of the sample. Cuts are only allowed at cell boundaries, making
// the 2^(R-1) candidate partitions literal.
class HistogramGrid {
public:
    HistogramGrid(const std::vector<double>& sample, double a, double b,
                  std::uint32_t cells);

    double lo() const { return a_; }
    double hi() const { return b_; }
    std::uint32_t cells() const { return R_; }
    std::uint64_t sample_size() const { return n_; }

    double cut_position(std::uint32_t t) const {
        return a_ + static_cast<double>(t) * (b_ - a_) / R_;
    }
    // Points in grid cells [t0, t1).
    std::uint64_t count_between(std::uint32_t t0, std::uint32_t t1) const {
        return prefix_[t1] - prefix_[t0];
    }
    double length_between(std::uint32_t t0, std::uint32_t t1) const {
        return static_cast<double>(t1 - t0) * (b_ - a_) / R_;
    }

private:
    double a_;
    double b_;
    std::uint32_t R_;
    std::uint64_t n_;
    std::vector<std::uint64_t> prefix_; // R+1 entries
};

// -sum n_j log2(n_j/(n L_j)) + (m-1)/2 log2 n over the partition given by
// cut indices (must start at 0, end at R, strictly ascending).
double crit_histogram(const HistogramGrid& grid,
                      const std::vector<std::uint32_t>& cuts);

struct HistogramPartition {
    std::vector<std::uint32_t> cuts; // t_0 = 0 < ... < t_m = R
    std::vector<std::uint64_t> counts;
    std::vector<double> lengths;
    double criterion = 0.0;
    std::uint64_t cost_evaluations = 0; // interval-cost calls made by the DP

    std::uint32_t interval_count() const {
        return static_cast<std::uint32_t>(cuts.size() - 1);
    }
    double density(std::uint32_t j, std::uint64_t n) const {
        return counts[j] == 0
                   ? 0.0
                   : static_cast<double>(counts[j]) /
                         (static_cast<double>(n) * lengths[j]);
    }
};

// Exact minimizer of the criterion over all grid-aligned partitions via a
// shortest-path DP over cut positions: each interval costs its likelihood
// term plus (1/2) log2 n, and the constant -(1/2) log2 n is added once.
// Ties break toward fewer intervals, then the lexicographically smallest
// cut set. O(R^2) interval-cost evaluations.
HistogramPartition dp_select(const HistogramGrid& grid);

// Per-interval DP cost; exposed so exhaustive search in tests accumulates
// the exact same terms.
double histogram_interval_cost(const HistogramGrid& grid, std::uint32_t t0,
                               std::uint32_t t1);

// Laplace(0, scale) sample clipped to [a, b] by redrawing; deterministic
// per seed.
std::vector<double> sample_laplace(double scale, std::uint64_t n,
                                   std::uint64_t seed, double a, double b);

} // namespace paac
