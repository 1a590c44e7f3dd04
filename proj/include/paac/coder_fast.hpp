#pragma once

#include "paac/blob.hpp"
#include "paac/chain.hpp"

namespace paac {

// Renormalizing integer coder with 62-bit range registers and pending-bit
// (straddle) handling. Uses the same adaptive model and symbol-to-interval
// layout as the reference coder; codelength stays within +2 bits of it.
CodedBlob encode_fast(const SymbolChain& chain, std::uint32_t k);
SymbolChain decode_fast(const CodedBlob& blob);

// Payload bit count of encode_fast; the quantity L(x^n|k) compared with BIC.
double codelength(const SymbolChain& chain, std::uint32_t k);

} // namespace paac
