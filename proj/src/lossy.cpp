#include "paac/lossy.hpp"

#include <cmath>
#include <limits>

namespace paac {
namespace {

std::uint8_t round_half_away(double v) {
    return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

} // namespace

GrayImage QuantizedImage::to_image() const {
    SymbolChain mapped;
    mapped.alphabet_size = 256;
    mapped.symbols.reserve(cells.size());
    for (Symbol c : cells.symbols) mapped.symbols.push_back(levels[c]);
    return delinearize(mapped, rows, cols, scan);
}

QuantizedImage barycenter_quantize(const GrayImage& image, const Partition& p,
                                   Scan scan) {
    const SymbolChain x = linearize(image, scan);
    const std::uint32_t m = p.cell_count();

    std::vector<std::uint64_t> sums(m, 0);
    std::vector<std::uint64_t> occupancy(m, 0);
    for (Symbol s : x.symbols) {
        const std::uint32_t j = p.cell_of(s);
        sums[j] += s;
        occupancy[j]++;
    }

    QuantizedImage q;
    q.rows = image.rows;
    q.cols = image.cols;
    q.scan = scan;
    q.cells = cell_chain(x, p);
    q.levels.resize(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        if (occupancy[j] > 0) {
            q.levels[j] = round_half_away(static_cast<double>(sums[j]) /
                                          static_cast<double>(occupancy[j]));
        } else {
            // midpoint of [lower, upper-1]
            q.levels[j] = round_half_away(
                (static_cast<double>(p.lower(j)) + (p.upper(j) - 1)) / 2.0);
        }
    }
    return q;
}

double psnr(const GrayImage& original, const GrayImage& quantized) {
    if (original.rows != quantized.rows || original.cols != quantized.cols)
        throw InvalidArgument("psnr: image dimensions differ");
    double sq = 0.0;
    for (std::size_t i = 0; i < original.pixels.size(); ++i) {
        const double d = static_cast<double>(original.pixels[i]) -
                         static_cast<double>(quantized.pixels[i]);
        sq += d * d;
    }
    if (sq == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = sq / static_cast<double>(original.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::vector<LossySweepRow> rate_distortion_sweep(
    const GrayImage& image, const std::vector<std::uint32_t>& orders,
    std::uint32_t m_lo, std::uint32_t m_hi, Scan scan, PenaltyMode mode) {
    if (m_lo < 1 || m_hi > 256 || m_lo > m_hi)
        throw InvalidArgument("m range must satisfy 1 <= lo <= hi <= 256");
    const double n = static_cast<double>(image.size());

    std::vector<LossySweepRow> rows;
    for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
        const Partition p = regular_partition(m);
        const QuantizedImage q = barycenter_quantize(image, p, scan);
        const double distortion = psnr(image, q.to_image());
        for (std::uint32_t k : orders) {
            LossySweepRow row;
            row.m = m;
            row.k = k;
            row.bic_bits = (m == 1) ? 0.0 : bic(q.cells, k, mode);
            row.rate_bpp = row.bic_bits / n;
            row.psnr_db = distortion;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace paac
