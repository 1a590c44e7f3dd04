#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "paac/chain.hpp"
#include "paac/counts.hpp"

namespace paac {

enum class PenaltyMode {
    Full,      // (m-1) * m^k free parameters
    Effective, // sum over observed contexts of (distinct successors - 1)
};

// Maximum-likelihood transition probabilities. Rows are indexed by packed
// context key; contexts never observed stay undefined and contribute nothing
// to the likelihood.
struct ThetaParam {
    std::uint32_t order = 0;
    std::uint32_t alphabet = 0;
    std::uint32_t key_bits = 0;
    std::vector<double> probs;        // ctx * alphabet + symbol
    std::vector<std::uint8_t> defined; // per packed context

    bool is_defined(std::uint64_t ctx) const { return defined[ctx] != 0; }
    double prob(std::uint64_t ctx, Symbol s) const {
        return probs[ctx * alphabet + s];
    }
    std::uint64_t context_slots() const {
        return std::uint64_t{1} << key_bits;
    }
};

ThetaParam ml_estimate(const TransitionCounts& counts);

// k*log2(m) - sum n(i|j) log2 thetahat(i|j), with 0 log 0 = 0.
// All codelengths are in bits (base-2 logs throughout).
double ml_codelength(const TransitionCounts& counts);
double ml_codelength(const SymbolChain& chain, std::uint32_t k);

// Number of free parameters charged by the BIC penalty.
double free_parameter_count(const TransitionCounts& counts, PenaltyMode mode);

double bic(const TransitionCounts& counts, PenaltyMode mode = PenaltyMode::Full);
double bic(const SymbolChain& chain, std::uint32_t k,
           PenaltyMode mode = PenaltyMode::Full);

struct OrderRow {
    std::uint32_t k = 0;
    double ml_bits = 0.0;
    double bic_bits = 0.0;
    std::optional<double> paac_bits;
    double alpha = 0.0;      // n / ((m-1) m^k)
    bool alpha_warning = false; // alpha < 20
    bool chosen = false;
};

struct OrderSelectionReport {
    std::vector<OrderRow> rows;
    std::uint32_t chosen_order = 0;
};

// Evaluates BIC for k = 0..min(k_max, n-1); argmin with ties toward smaller k.
// codelength_fn, when given, fills the optional paac_bits column.
using CodelengthFn =
    std::function<double(const SymbolChain&, std::uint32_t)>;

OrderSelectionReport select_order(const SymbolChain& chain,
                                  std::uint32_t k_max,
                                  PenaltyMode mode = PenaltyMode::Full,
                                  const CodelengthFn& codelength_fn = nullptr);

} // namespace paac
