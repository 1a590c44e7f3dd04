#pragma once

#include <cstdint>
#include <vector>

#include "paac/image.hpp"
#include "paac/model.hpp"
#include "paac/partition.hpp"

namespace paac {

// Barycenter-quantized image: the cell chain plus the injective cell-to-level
// map B; enough for the decoder to rebuild the quantized image.
struct QuantizedImage {
    SymbolChain cells;                // y^n over [0, m-1]
    std::vector<std::uint8_t> levels; // B_j, one level per cell
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    Scan scan = Scan::Zigzag;

    GrayImage to_image() const;
};

// Every value in a cell is replaced by the cell mean rounded half away from
// zero; empty cells reconstruct at the interval midpoint.
QuantizedImage barycenter_quantize(const GrayImage& image, const Partition& p,
                                   Scan scan = Scan::Zigzag);

// 10 log10(255^2 / MSE); +infinity for equal images.
double psnr(const GrayImage& original, const GrayImage& quantized);

struct LossySweepRow {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    double bic_bits = 0.0;
    double rate_bpp = 0.0;
    double psnr_db = 0.0;
};

std::vector<LossySweepRow> rate_distortion_sweep(
    const GrayImage& image, const std::vector<std::uint32_t>& orders,
    std::uint32_t m_lo, std::uint32_t m_hi, Scan scan = Scan::Zigzag,
    PenaltyMode mode = PenaltyMode::Full);

} // namespace paac
