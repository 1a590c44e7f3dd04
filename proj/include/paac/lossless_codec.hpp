#pragma once

#include <cstdint>
#include <vector>

#include "paac/image.hpp"
#include "paac/model.hpp"
#include "paac/partition.hpp"

namespace paac {

// Estimated two-part codelength: BIC(y^n|k) + sum n_j ceil(log2 A_j),
// where y is the cell chain of x on the partition.
double crit_lossless(const SymbolChain& x, std::uint32_t k, const Partition& p,
                     PenaltyMode mode = PenaltyMode::Full);

struct LosslessSweepRow {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    double crit_bits = 0.0;
    double rate_bpp = 0.0;
    double alpha = 0.0;
    bool alpha_ok = true; // alpha >= 20 (sample-size condition)
};

struct LosslessSweepBest {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    double crit_bits = 0.0;
};

struct LosslessSweep {
    std::vector<LosslessSweepRow> rows; // grid order: k outer, m inner
    std::vector<LosslessSweepBest> per_order_best;
};

LosslessSweep lossless_sweep(const SymbolChain& x,
                             const std::vector<std::uint32_t>& orders,
                             std::uint32_t m_lo, std::uint32_t m_hi,
                             PenaltyMode mode = PenaltyMode::Full);

// Two-part container: image header and partition, the PAC1 blob of the cell
// chain, then the fixed-length residual section prefixed by its bit count
// (8 bytes big-endian). Decoding recovers the image exactly.
std::vector<std::uint8_t> encode_lossless_image(const GrayImage& image,
                                                std::uint32_t k,
                                                const Partition& p,
                                                Scan scan = Scan::Zigzag);

struct LosslessDecodeResult {
    GrayImage image;
    std::uint32_t order = 0;
    std::uint32_t m = 0;
    Scan scan = Scan::Zigzag;
};

LosslessDecodeResult decode_lossless_image(
    const std::vector<std::uint8_t>& bytes);

} // namespace paac
