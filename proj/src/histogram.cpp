#include "paac/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paac/rng.hpp"

namespace paac {

HistogramGrid::HistogramGrid(const std::vector<double>& sample, double a,
                             double b, std::uint32_t cells)
    : a_(a), b_(b), R_(cells), n_(sample.size()) {
    if (!(a < b)) throw InvalidArgument("grid interval must satisfy a < b");
    if (R_ < 1) throw InvalidArgument("grid needs at least one cell");
    if (n_ == 0) throw InvalidArgument("histogram sample must be non-empty");

    std::vector<std::uint64_t> cell_counts(R_, 0);
    for (double x : sample) {
        if (x < a_ || x > b_)
            throw InvalidArgument("sample point outside the grid interval");
        auto cell = static_cast<std::uint32_t>((x - a_) / (b_ - a_) * R_);
        if (cell >= R_) cell = R_ - 1; // x == b lands in the last cell
        cell_counts[cell]++;
    }
    prefix_.assign(R_ + 1, 0);
    for (std::uint32_t t = 0; t < R_; ++t)
        prefix_[t + 1] = prefix_[t] + cell_counts[t];
}

double histogram_interval_cost(const HistogramGrid& grid, std::uint32_t t0,
                               std::uint32_t t1) {
    const std::uint64_t nj = grid.count_between(t0, t1);
    const double n = static_cast<double>(grid.sample_size());
    const double penalty = 0.5 * std::log2(n);
    if (nj == 0) return penalty; // empty interval: zero likelihood cost
    const double lj = grid.length_between(t0, t1);
    const double njd = static_cast<double>(nj);
    return -njd * std::log2(njd / (n * lj)) + penalty;
}

namespace {

void validate_cuts(const HistogramGrid& grid,
                   const std::vector<std::uint32_t>& cuts) {
    if (cuts.size() < 2 || cuts.front() != 0 || cuts.back() != grid.cells())
        throw InvalidArgument("cuts must run from 0 to R");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] <= cuts[i - 1])
            throw InvalidArgument("cuts must be strictly ascending");
}

} // namespace

double crit_histogram(const HistogramGrid& grid,
                      const std::vector<std::uint32_t>& cuts) {
    validate_cuts(grid, cuts);
    const double n = static_cast<double>(grid.sample_size());
    const std::size_t m = cuts.size() - 1;
    double likelihood = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t nj = grid.count_between(cuts[j], cuts[j + 1]);
        if (nj == 0) continue;
        const double lj = grid.length_between(cuts[j], cuts[j + 1]);
        const double njd = static_cast<double>(nj);
        likelihood -= njd * std::log2(njd / (n * lj));
    }
    return likelihood +
           (static_cast<double>(m) - 1.0) / 2.0 * std::log2(n);
}

HistogramPartition dp_select(const HistogramGrid& grid) {
    const std::uint32_t R = grid.cells();

    struct Node {
        double cost = std::numeric_limits<double>::infinity();
        std::uint32_t intervals = 0;
        std::vector<std::uint32_t> interior; // cuts strictly inside (0, t)
    };
    std::vector<Node> dp(R + 1);
    dp[0].cost = 0.0;

    std::uint64_t evaluations = 0;
    std::vector<std::uint32_t> cand_cuts;
    for (std::uint32_t t = 1; t <= R; ++t) {
        Node& best = dp[t];
        for (std::uint32_t s = 0; s < t; ++s) {
            const double cost =
                dp[s].cost + histogram_interval_cost(grid, s, t);
            ++evaluations;
            const std::uint32_t intervals = dp[s].intervals + 1;

            bool better;
            if (cost != best.cost) {
                better = cost < best.cost;
            } else if (intervals != best.intervals) {
                better = intervals < best.intervals;
            } else {
                cand_cuts = dp[s].interior;
                if (s > 0) cand_cuts.push_back(s);
                better = std::lexicographical_compare(
                    cand_cuts.begin(), cand_cuts.end(),
                    best.interior.begin(), best.interior.end());
            }
            if (better) {
                best.cost = cost;
                best.intervals = intervals;
                best.interior = dp[s].interior;
                if (s > 0) best.interior.push_back(s);
            }
        }
    }

    HistogramPartition part;
    part.cuts.push_back(0);
    part.cuts.insert(part.cuts.end(), dp[R].interior.begin(),
                     dp[R].interior.end());
    part.cuts.push_back(R);
    part.criterion =
        dp[R].cost -
        0.5 * std::log2(static_cast<double>(grid.sample_size()));
    part.cost_evaluations = evaluations;
    for (std::size_t j = 0; j + 1 < part.cuts.size(); ++j) {
        part.counts.push_back(
            grid.count_between(part.cuts[j], part.cuts[j + 1]));
        part.lengths.push_back(
            grid.length_between(part.cuts[j], part.cuts[j + 1]));
    }
    return part;
}

std::vector<double> sample_laplace(double scale, std::uint64_t n,
                                   std::uint64_t seed, double a, double b) {
    if (!(scale > 0.0)) throw InvalidArgument("laplace scale must be > 0");
    if (!(a < b)) throw InvalidArgument("interval must satisfy a < b");

    Rng rng(seed);
    std::vector<double> sample;
    sample.reserve(n);
    std::uint64_t rejects = 0;
    while (sample.size() < n) {
        const double x = rng.laplace(scale);
        if (x >= a && x <= b) {
            sample.push_back(x);
        } else if (++rejects > 10'000'000ull) {
            throw InvalidArgument(
                "interval rejects nearly all Laplace mass");
        }
    }
    return sample;
}

} // namespace paac
