#pragma once

#include <cstdint>
#include <vector>

#include "paac/errors.hpp"

namespace paac {

using Symbol = std::uint32_t;

// Finite sequence over the alphabet {0..m-1}.
struct SymbolChain {
    std::vector<Symbol> symbols;
    std::uint32_t alphabet_size = 0; // m >= 1

    SymbolChain() = default;
    SymbolChain(std::vector<Symbol> syms, std::uint32_t m)
        : symbols(std::move(syms)), alphabet_size(m) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

// Every symbol must satisfy 0 <= s < m.
inline void validate_chain(const SymbolChain& chain) {
    if (chain.alphabet_size == 0)
        throw InvalidArgument("alphabet size must be >= 1");
    for (Symbol s : chain.symbols)
        if (s >= chain.alphabet_size)
            throw InvalidArgument("symbol " + std::to_string(s) +
                                  " out of range for alphabet " +
                                  std::to_string(chain.alphabet_size));
}

} // namespace paac
