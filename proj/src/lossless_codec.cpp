#include "paac/lossless_codec.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "paac/bitio.hpp"
#include "paac/blob.hpp"
#include "paac/coder_fast.hpp"

namespace paac {
namespace {

constexpr char kMagic[4] = {'P', 'I', 'M', '1'};
constexpr std::uint8_t kVersion = 0x01;

double parameter_alpha(std::uint64_t n, std::uint32_t m, std::uint32_t k) {
    if (m <= 1) return std::numeric_limits<double>::infinity();
    long double params = static_cast<long double>(m - 1);
    for (std::uint32_t i = 0; i < k; ++i) params *= m;
    return static_cast<double>(static_cast<long double>(n) / params);
}

} // namespace

double crit_lossless(const SymbolChain& x, std::uint32_t k, const Partition& p,
                     PenaltyMode mode) {
    const SymbolChain y = cell_chain(x, p);
    // A single-cell partition makes y constant; its code costs nothing.
    const double model_bits = (p.cell_count() == 1) ? 0.0 : bic(y, k, mode);
    return model_bits + static_cast<double>(residual_bits(x, p));
}

LosslessSweep lossless_sweep(const SymbolChain& x,
                             const std::vector<std::uint32_t>& orders,
                             std::uint32_t m_lo, std::uint32_t m_hi,
                             PenaltyMode mode) {
    if (m_lo < 1 || m_hi > 256 || m_lo > m_hi)
        throw InvalidArgument("m range must satisfy 1 <= lo <= hi <= 256");
    const double n = static_cast<double>(x.size());

    LosslessSweep sweep;
    for (std::uint32_t k : orders) {
        LosslessSweepBest best{k, 0,
                               std::numeric_limits<double>::infinity()};
        for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
            const Partition p = regular_partition(m);
            LosslessSweepRow row;
            row.k = k;
            row.m = m;
            row.crit_bits = crit_lossless(x, k, p, mode);
            row.rate_bpp = row.crit_bits / n;
            row.alpha = parameter_alpha(x.size(), m, k);
            row.alpha_ok = row.alpha >= 20.0;
            if (row.crit_bits < best.crit_bits) {
                best.m = m;
                best.crit_bits = row.crit_bits;
            }
            sweep.rows.push_back(row);
        }
        sweep.per_order_best.push_back(best);
    }
    return sweep;
}

std::vector<std::uint8_t> encode_lossless_image(const GrayImage& image,
                                                std::uint32_t k,
                                                const Partition& p,
                                                Scan scan) {
    const SymbolChain x = linearize(image, scan);
    const SymbolChain y = cell_chain(x, p);
    const std::uint32_t m = p.cell_count();

    CodedBlob blob;
    if (m >= 2) {
        blob = encode_fast(y, k);
    } else { // constant cell chain: zero coded bits
        blob.order = k;
        blob.alphabet = 1;
        blob.chain_length = y.size();
        blob.payload_bits = 0;
    }

    BitWriter residual;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint32_t j = static_cast<std::uint32_t>(y.symbols[i]);
        const std::uint32_t nbits = ceil_log2(p.width(j));
        residual.put_bits(x.symbols[i] - p.lower(j), nbits);
    }

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(scan));
    append_u32_be(out, image.rows);
    append_u32_be(out, image.cols);
    append_u16_be(out, static_cast<std::uint16_t>(m));
    for (std::uint32_t j = 1; j < m; ++j)
        out.push_back(static_cast<std::uint8_t>(p.lower(j)));

    const std::vector<std::uint8_t> blob_bytes = blob.serialize();
    out.insert(out.end(), blob_bytes.begin(), blob_bytes.end());
    append_u64_be(out, residual.bit_count());
    const std::vector<std::uint8_t> res_bytes = residual.take_bytes();
    out.insert(out.end(), res_bytes.begin(), res_bytes.end());
    return out;
}

LosslessDecodeResult decode_lossless_image(
    const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    if (bytes.size() < 16) throw BadContainer("truncated image header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw BadContainer("wrong magic");
    if (bytes[4] != kVersion)
        throw BadContainer("unsupported version " + std::to_string(bytes[4]));
    if (bytes[5] > 1) throw BadContainer("unknown scan order");
    const Scan scan = static_cast<Scan>(bytes[5]);
    const std::uint32_t rows = read_u32_be(bytes.data() + 6);
    const std::uint32_t cols = read_u32_be(bytes.data() + 10);
    const std::uint32_t m = read_u16_be(bytes.data() + 14);
    pos = 16;
    if (rows == 0 || cols == 0) throw BadContainer("empty image dimensions");
    if (m < 1 || m > 256) throw BadContainer("invalid partition size");
    if (bytes.size() - pos < m - 1) throw BadContainer("truncated partition");

    std::vector<std::uint16_t> bounds;
    bounds.push_back(0);
    for (std::uint32_t j = 1; j < m; ++j) bounds.push_back(bytes[pos++]);
    bounds.push_back(256);
    const Partition p = [&] {
        try {
            return Partition(std::move(bounds));
        } catch (const InvalidArgument& e) {
            throw BadContainer(e.what());
        }
    }();

    CodedBlob blob = CodedBlob::parse(bytes, pos);
    const std::uint64_t n = static_cast<std::uint64_t>(rows) * cols;
    if (blob.alphabet != m || blob.chain_length != n)
        throw BadContainer("blob header disagrees with image header");

    SymbolChain y;
    if (m >= 2) {
        y = decode_fast(blob);
    } else {
        y.alphabet_size = 1;
        y.symbols.assign(n, 0);
    }

    if (bytes.size() - pos < 8) throw BadContainer("missing residual section");
    const std::uint64_t residual_bit_count = read_u64_be(bytes.data() + pos);
    pos += 8;
    if (bytes.size() - pos < (residual_bit_count + 7) / 8)
        throw CorruptPayload("residual shorter than declared bit count");

    BitReader reader(bytes.data() + pos, residual_bit_count);
    SymbolChain x;
    x.alphabet_size = 256;
    x.symbols.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint32_t j = static_cast<std::uint32_t>(y.symbols[i]);
        const std::uint32_t nbits = ceil_log2(p.width(j));
        const std::uint64_t offset = reader.read_bits(nbits);
        if (offset >= p.width(j))
            throw CorruptPayload("residual value outside its interval");
        x.symbols.push_back(p.lower(j) + static_cast<Symbol>(offset));
    }
    if (reader.position() != residual_bit_count)
        throw CorruptPayload("residual bit count mismatch");

    LosslessDecodeResult result;
    result.image = delinearize(x, rows, cols, scan);
    result.order = blob.order;
    result.m = m;
    result.scan = scan;
    return result;
}

} // namespace paac
