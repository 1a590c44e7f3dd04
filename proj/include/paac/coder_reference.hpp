#pragma once

#include <gmpxx.h>

#include "paac/blob.hpp"
#include "paac/chain.hpp"

namespace paac {

// Exact coding interval; 0 <= low < high <= 1. After t coded symbols the
// width equals the product of the adaptive probabilities of those symbols.
struct CodeInterval {
    mpq_class low{0};
    mpq_class high{1};

    mpq_class width() const { return high - low; }
};

struct ReferenceEncodeResult {
    CodedBlob blob;
    CodeInterval final_interval;
};

// Dyadic finalization of an interval: L = ceil(-log2(high-low)) and the
// fractional bits of the largest dyadic q/2^L lying in (low, high]. An
// all-zero payload therefore denotes the dyadic 1 (q = 2^L), which only
// arises when high = 1.
struct DyadicCode {
    std::uint64_t bit_count = 0;
    std::vector<std::uint8_t> bits; // one bit per entry, MSB first
};
DyadicCode finalize_dyadic(const CodeInterval& interval);

// Exact-arithmetic adaptive coder. Splits the current interval into m
// subintervals in ascending symbol order (symbol 0 leftmost), each with
// exact rational length proportional to the adaptive prediction. Feasible
// for chains up to a few hundred symbols; see encode_fast for image scale.
ReferenceEncodeResult encode_reference_ex(const SymbolChain& chain,
                                          std::uint32_t k);
CodedBlob encode_reference(const SymbolChain& chain, std::uint32_t k);

SymbolChain decode_reference(const CodedBlob& blob);

} // namespace paac
