#include "paac/model.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

namespace paac {
namespace {

constexpr double kParamLimit = 4611686018427387904.0; // 2^62

// (m-1) * m^k with an explicit overflow guard.
double full_parameter_count(std::uint32_t m, std::uint32_t k) {
    if (m <= 1) return 0.0;
    long double p = static_cast<long double>(m - 1);
    for (std::uint32_t i = 0; i < k; ++i) {
        p *= m;
        if (!std::isfinite(static_cast<double>(p)) || p > kParamLimit)
            throw ModelTooLarge("(m-1)*m^k with m=" + std::to_string(m) +
                                ", k=" + std::to_string(k));
    }
    return static_cast<double>(p);
}

} // namespace

ThetaParam ml_estimate(const TransitionCounts& counts) {
    const std::uint32_t m = counts.alphabet();
    const std::uint32_t key_bits = counts.table.packer().key_bits();
    const std::uint64_t slots = std::uint64_t{1} << key_bits;
    if (slots > (std::uint64_t{1} << 26) / (m ? m : 1))
        throw ModelTooLarge("theta table for m=" + std::to_string(m) +
                            ", k=" + std::to_string(counts.order()));

    ThetaParam theta;
    theta.order = counts.order();
    theta.alphabet = m;
    theta.key_bits = key_bits;
    theta.probs.assign(slots * m, 0.0);
    theta.defined.assign(slots, 0);

    counts.table.for_each_context([&](std::uint64_t ctx, std::uint64_t total) {
        theta.defined[ctx] = 1;
        for (Symbol s = 0; s < m; ++s) {
            theta.probs[ctx * m + s] =
                static_cast<double>(counts.table.count(ctx, s)) /
                static_cast<double>(total);
        }
    });
    return theta;
}

double ml_codelength(const TransitionCounts& counts) {
    const double warmup =
        static_cast<double>(counts.order()) * std::log2(counts.alphabet());
    double bits = 0.0;
    counts.table.for_each_transition(
        [&](std::uint64_t ctx, Symbol, std::uint64_t c) {
            const double total =
                static_cast<double>(counts.table.total(ctx));
            bits -= static_cast<double>(c) *
                    std::log2(static_cast<double>(c) / total);
        });
    return warmup + bits;
}

double ml_codelength(const SymbolChain& chain, std::uint32_t k) {
    if (chain.empty()) throw InvalidArgument("chain must be non-empty");
    return ml_codelength(count_transitions(chain, k));
}

double free_parameter_count(const TransitionCounts& counts, PenaltyMode mode) {
    if (mode == PenaltyMode::Full)
        return full_parameter_count(counts.alphabet(), counts.order());
    // Effective mode: per observed context, one fewer than the number of
    // distinct successors actually seen.
    double params = 0.0;
    std::unordered_map<std::uint64_t, std::uint64_t> distinct;
    counts.table.for_each_transition(
        [&](std::uint64_t ctx, Symbol, std::uint64_t) { distinct[ctx]++; });
    for (const auto& [ctx, d] : distinct)
        if (d > 1) params += static_cast<double>(d - 1);
    return params;
}

double bic(const TransitionCounts& counts, PenaltyMode mode) {
    if (counts.chain_length == 0)
        throw InvalidArgument("chain must be non-empty");
    const double penalty =
        free_parameter_count(counts, mode) / 2.0 *
        std::log2(static_cast<double>(counts.chain_length));
    return ml_codelength(counts) + penalty;
}

double bic(const SymbolChain& chain, std::uint32_t k, PenaltyMode mode) {
    return bic(count_transitions(chain, k), mode);
}

OrderSelectionReport select_order(const SymbolChain& chain,
                                  std::uint32_t k_max, PenaltyMode mode,
                                  const CodelengthFn& codelength_fn) {
    validate_chain(chain);
    if (chain.empty()) throw InvalidArgument("chain must be non-empty");
    const std::uint64_t n = chain.size();
    // Orders >= n never see a full context; the report stops at n-1.
    const std::uint32_t k_top = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(k_max, n - 1));

    OrderSelectionReport report;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t k = 0; k <= k_top; ++k) {
        TransitionCounts counts = count_transitions(chain, k);
        OrderRow row;
        row.k = k;
        row.ml_bits = ml_codelength(counts);
        row.bic_bits = bic(counts, mode);
        const double full_params =
            full_parameter_count(chain.alphabet_size, k);
        row.alpha = full_params > 0.0
                        ? static_cast<double>(n) / full_params
                        : std::numeric_limits<double>::infinity();
        row.alpha_warning = row.alpha < 20.0;
        if (codelength_fn) row.paac_bits = codelength_fn(chain, k);
        if (row.bic_bits < best) {
            best = row.bic_bits;
            report.chosen_order = k;
        }
        report.rows.push_back(std::move(row));
    }
    report.rows[report.chosen_order].chosen = true;
    return report;
}

} // namespace paac
