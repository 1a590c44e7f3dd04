#pragma once

#include <cstdint>
#include <vector>

#include "paac/chain.hpp"

namespace paac {

// 8-bit grayscale image, row-major.
struct GrayImage {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::uint32_t r, std::uint32_t c) const {
        return pixels[static_cast<std::size_t>(r) * cols + c];
    }
    std::uint8_t& at(std::uint32_t r, std::uint32_t c) {
        return pixels[static_cast<std::size_t>(r) * cols + c];
    }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

enum class Scan : std::uint8_t {
    Raster = 0,
    Zigzag = 1,
};

const char* scan_name(Scan scan);
Scan scan_from_name(const std::string& name);

// P5 (binary) and P2 (ASCII) with maxval <= 255; '#' comments tolerated.
GrayImage read_pgm(const std::vector<std::uint8_t>& bytes);
GrayImage read_pgm_file(const std::string& path);

// Canonical P5 output.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);
void write_pgm_file(const GrayImage& image, const std::string& path);

// Zigzag visits anti-diagonals d = 0..r+c-2, walking toward increasing
// column on even d and increasing row on odd d (whole-image JPEG-style
// scan). Raster is plain row-major order.
SymbolChain linearize(const GrayImage& image, Scan scan);
GrayImage delinearize(const SymbolChain& chain, std::uint32_t rows,
                      std::uint32_t cols, Scan scan);

} // namespace paac
