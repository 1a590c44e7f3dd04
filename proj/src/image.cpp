#include "paac/image.hpp"

#include <fstream>
#include <string>

#include "paac/errors.hpp"

namespace paac {
namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
}

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(const std::vector<std::uint8_t>& bytes,
                       std::size_t& pos) {
    for (;;) {
        while (pos < bytes.size() && is_pnm_space(bytes[pos])) ++pos;
        if (pos < bytes.size() && bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            continue;
        }
        break;
    }
    std::string token;
    while (pos < bytes.size() && !is_pnm_space(bytes[pos]) &&
           bytes[pos] != '#')
        token.push_back(static_cast<char>(bytes[pos++]));
    if (token.empty()) throw IoError("malformed PGM header: missing token");
    return token;
}

std::uint64_t parse_number(const std::string& token) {
    std::uint64_t v = 0;
    if (token.empty()) throw IoError("malformed PGM header: empty number");
    for (char c : token) {
        if (c < '0' || c > '9')
            throw IoError("malformed PGM header: not a number: " + token);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0xFFFFFFFFull) throw IoError("PGM header value too large");
    }
    return v;
}

} // namespace

const char* scan_name(Scan scan) {
    return scan == Scan::Raster ? "raster" : "zigzag";
}

Scan scan_from_name(const std::string& name) {
    if (name == "raster") return Scan::Raster;
    if (name == "zigzag") return Scan::Zigzag;
    throw InvalidArgument("unknown scan order: " + name);
}

GrayImage read_pgm(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    const std::string magic = next_token(bytes, pos);
    if (magic != "P5" && magic != "P2")
        throw IoError("unsupported PNM magic: " + magic);

    const std::uint64_t cols = parse_number(next_token(bytes, pos));
    const std::uint64_t rows = parse_number(next_token(bytes, pos));
    const std::uint64_t maxval = parse_number(next_token(bytes, pos));
    if (cols == 0 || rows == 0) throw IoError("PGM with empty dimensions");
    if (maxval == 0 || maxval > 255)
        throw IoError("unsupported depth: maxval " + std::to_string(maxval));

    GrayImage img;
    img.rows = static_cast<std::uint32_t>(rows);
    img.cols = static_cast<std::uint32_t>(cols);
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    img.pixels.reserve(n);

    if (magic == "P5") {
        if (pos >= bytes.size() || !is_pnm_space(bytes[pos]))
            throw IoError("malformed PGM: missing raster separator");
        ++pos; // exactly one whitespace byte before the raster
        if (bytes.size() - pos < n) throw IoError("truncated PGM pixel data");
        img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                          bytes.begin() + static_cast<std::ptrdiff_t>(pos + n));
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t v = parse_number(next_token(bytes, pos));
            if (v > maxval) throw IoError("PGM sample exceeds maxval");
            img.pixels.push_back(static_cast<std::uint8_t>(v));
        }
    }
    for (std::uint8_t& p : img.pixels)
        if (p > maxval) throw IoError("PGM sample exceeds maxval");
    return img;
}

GrayImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
    if (image.rows == 0 || image.cols == 0 ||
        image.pixels.size() !=
            static_cast<std::size_t>(image.rows) * image.cols)
        throw InvalidArgument("image dimensions do not match pixel data");
    const std::string header = "P5\n" + std::to_string(image.cols) + " " +
                               std::to_string(image.rows) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

void write_pgm_file(const GrayImage& image, const std::string& path) {
    const std::vector<std::uint8_t> bytes = write_pgm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing " + path);
}

namespace {

// Visits (row, col) pairs in zigzag order.
template <class F>
void zigzag_walk(std::uint32_t rows, std::uint32_t cols, F&& f) {
    const std::int64_t r = rows, c = cols;
    for (std::int64_t d = 0; d <= r + c - 2; ++d) {
        if (d % 2 == 0) { // toward increasing column
            const std::int64_t j_lo = std::max<std::int64_t>(0, d - (r - 1));
            const std::int64_t j_hi = std::min<std::int64_t>(d, c - 1);
            for (std::int64_t j = j_lo; j <= j_hi; ++j)
                f(static_cast<std::uint32_t>(d - j),
                  static_cast<std::uint32_t>(j));
        } else { // toward increasing row
            const std::int64_t i_lo = std::max<std::int64_t>(0, d - (c - 1));
            const std::int64_t i_hi = std::min<std::int64_t>(d, r - 1);
            for (std::int64_t i = i_lo; i <= i_hi; ++i)
                f(static_cast<std::uint32_t>(i),
                  static_cast<std::uint32_t>(d - i));
        }
    }
}

} // namespace

SymbolChain linearize(const GrayImage& image, Scan scan) {
    SymbolChain chain;
    chain.alphabet_size = 256;
    chain.symbols.reserve(image.size());
    if (scan == Scan::Raster) {
        for (std::uint8_t p : image.pixels) chain.symbols.push_back(p);
    } else {
        zigzag_walk(image.rows, image.cols,
                    [&](std::uint32_t i, std::uint32_t j) {
                        chain.symbols.push_back(image.at(i, j));
                    });
    }
    return chain;
}

GrayImage delinearize(const SymbolChain& chain, std::uint32_t rows,
                      std::uint32_t cols, Scan scan) {
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    if (chain.size() != n)
        throw InvalidArgument("chain length does not match image dimensions");
    GrayImage img;
    img.rows = rows;
    img.cols = cols;
    img.pixels.assign(n, 0);
    std::size_t idx = 0;
    if (scan == Scan::Raster) {
        for (std::size_t i = 0; i < n; ++i)
            img.pixels[i] = static_cast<std::uint8_t>(chain.symbols[i]);
    } else {
        zigzag_walk(rows, cols, [&](std::uint32_t i, std::uint32_t j) {
            img.at(i, j) = static_cast<std::uint8_t>(chain.symbols[idx++]);
        });
    }
    return img;
}

} // namespace paac
