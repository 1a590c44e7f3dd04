#pragma once

#include <string>

#include "paac/chain.hpp"

namespace paac {

// Chain text files: whitespace-separated non-negative integers.
// alphabet = 0 infers m as max symbol + 1.
SymbolChain read_chain_file(const std::string& path, std::uint32_t alphabet);
void write_chain_file(const SymbolChain& chain, const std::string& path);

} // namespace paac
