#include "paac/coder_fast.hpp"

#include "paac/adaptive_model.hpp"
#include "paac/bitio.hpp"

namespace paac {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTop = (u64{1} << 62) - 1;
constexpr u64 kHalf = u64{1} << 61;
constexpr u64 kQuarter = u64{1} << 60;
constexpr u64 kThreeQuarters = kHalf + kQuarter;

// Renormalization keeps range > kQuarter, so any denominator up to
// kQuarter splits without zero-width subintervals.
void check_scale(u64 n, u64 m) {
    if (n + m >= kQuarter)
        throw InvalidArgument("chain too long for the fast coder");
}

class BitSink {
public:
    void emit(std::uint32_t bit, u64& pending) {
        writer_.put_bit(bit);
        for (; pending > 0; --pending) writer_.put_bit(!bit);
    }
    BitWriter writer_;
};

} // namespace

CodedBlob encode_fast(const SymbolChain& chain, std::uint32_t k) {
    validate_chain(chain);
    if (chain.empty()) throw InvalidArgument("cannot encode an empty chain");
    if (chain.alphabet_size < 2)
        throw InvalidArgument("arithmetic coding requires m >= 2");
    check_scale(chain.size(), chain.alphabet_size);

    AdaptiveModel model(chain.alphabet_size, k);
    BitSink sink;
    u64 low = 0, high = kTop, pending = 0;

    for (Symbol s : chain.symbols) {
        const u64 den = model.denominator();
        const u64 cum_lo = model.cum_below(s);
        const u64 cum_hi = cum_lo + model.numerator(s);
        const u128 range = static_cast<u128>(high - low) + 1;
        high = low + static_cast<u64>(range * cum_hi / den) - 1;
        low = low + static_cast<u64>(range * cum_lo / den);

        for (;;) {
            if (high < kHalf) {
                sink.emit(0, pending);
            } else if (low >= kHalf) {
                sink.emit(1, pending);
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                ++pending;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
        model.advance(s);
    }

    // Identify a quarter-width interval inside [low, high]; trailing zeros
    // implied by the container padding complete the value.
    ++pending;
    sink.emit(low >= kQuarter ? 1 : 0, pending);

    CodedBlob blob;
    blob.order = k;
    blob.alphabet = chain.alphabet_size;
    blob.chain_length = chain.size();
    blob.payload_bits = sink.writer_.bit_count();
    blob.payload = sink.writer_.take_bytes();
    return blob;
}

SymbolChain decode_fast(const CodedBlob& blob) {
    const std::uint32_t m = blob.alphabet;
    const u64 n = blob.chain_length;

    SymbolChain chain;
    chain.alphabet_size = m;
    if (n == 0) return chain;
    if (m == 1) {
        if (blob.payload_bits != 0)
            throw CorruptPayload("m=1 blob carries payload bits");
        chain.symbols.assign(n, 0);
        return chain;
    }
    if (blob.payload_bits == 0)
        throw CorruptPayload("empty payload for non-empty chain");
    if (blob.payload.size() < (blob.payload_bits + 7) / 8)
        throw CorruptPayload("payload shorter than declared bit count");
    check_scale(n, m);

    AdaptiveModel model(m, blob.order);
    BitReader reader(blob.payload.data(), blob.payload_bits);
    u64 low = 0, high = kTop;
    u64 code = reader.read_bits(62);
    chain.symbols.reserve(n);

    for (u64 t = 0; t < n; ++t) {
        const u64 den = model.denominator();
        const u128 range = static_cast<u128>(high - low) + 1;
        const u64 scaled = static_cast<u64>(
            (static_cast<u128>(code - low + 1) * den - 1) / range);
        const Symbol s = model.find_symbol(scaled);

        const u64 cum_lo = model.cum_below(s);
        const u64 cum_hi = cum_lo + model.numerator(s);
        high = low + static_cast<u64>(range * cum_hi / den) - 1;
        low = low + static_cast<u64>(range * cum_lo / den);

        for (;;) {
            if (high < kHalf) {
                // nothing to subtract
            } else if (low >= kHalf) {
                code -= kHalf;
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                code -= kQuarter;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            code = (code << 1) | reader.next_bit();
        }
        chain.symbols.push_back(s);
        model.advance(s);
    }
    return chain;
}

double codelength(const SymbolChain& chain, std::uint32_t k) {
    return static_cast<double>(encode_fast(chain, k).payload_bits);
}

} // namespace paac
