#pragma once

#include <cstdint>

#include "paac/chain.hpp"
#include "paac/model.hpp"

namespace paac {

// Theta with every context row drawn from a symmetric Dirichlet.
// Deterministic given seed; rows sum to 1.
ThetaParam random_theta(std::uint32_t m, std::uint32_t k,
                        double concentration, std::uint64_t seed);

// First k symbols i.i.d. uniform on the alphabet, then theta-driven.
// Rejects rows that do not sum to 1 within 1e-9.
SymbolChain sample_mmc(const ThetaParam& theta, std::uint64_t n,
                       std::uint64_t seed);

} // namespace paac
