#include "paac/coder_reference.hpp"

#include "paac/adaptive_model.hpp"
#include "paac/bitio.hpp"

namespace paac {
namespace {

// Smallest L >= 0 with width >= 2^-L, i.e. ceil(-log2(width)).
std::uint64_t dyadic_length(const mpq_class& width) {
    if (width <= 0) throw Error("empty coding interval");
    if (width >= 1) return 0;
    const mpz_class num = width.get_num();
    const mpz_class den = width.get_den();
    const std::size_t nb = mpz_sizeinbase(num.get_mpz_t(), 2);
    const std::size_t db = mpz_sizeinbase(den.get_mpz_t(), 2);
    std::uint64_t L = (db > nb) ? static_cast<std::uint64_t>(db - nb) : 0;
    // bit lengths pin L to within one; settle exactly
    auto fits = [&](std::uint64_t cand) {
        mpz_class shifted;
        mpz_mul_2exp(shifted.get_mpz_t(), num.get_mpz_t(), cand);
        return shifted >= den;
    };
    while (L > 0 && fits(L - 1)) --L;
    while (!fits(L)) ++L;
    return L;
}

} // namespace

DyadicCode finalize_dyadic(const CodeInterval& interval) {
    const mpq_class width = interval.width();
    const std::uint64_t L = dyadic_length(width);

    // q = floor(high * 2^L): the largest dyadic numerator with q/2^L <= high.
    mpz_class scaled_num;
    mpz_mul_2exp(scaled_num.get_mpz_t(), interval.high.get_num().get_mpz_t(),
                 L);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(),
               interval.high.get_den().get_mpz_t());

    // width >= 2^-L guarantees q/2^L > low.
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(L));
    if (mpq_class(q, pow2) <= interval.low)
        throw Error("dyadic finalization left the coding interval");

    mpz_class frac = q;
    if (frac == pow2) frac = 0; // fractional part of the dyadic 1

    DyadicCode code;
    code.bit_count = L;
    code.bits.resize(L);
    for (std::uint64_t i = 0; i < L; ++i)
        code.bits[i] = static_cast<std::uint8_t>(
            mpz_tstbit(frac.get_mpz_t(), static_cast<mp_bitcnt_t>(L - 1 - i)));
    return code;
}

ReferenceEncodeResult encode_reference_ex(const SymbolChain& chain,
                                          std::uint32_t k) {
    validate_chain(chain);
    if (chain.empty()) throw InvalidArgument("cannot encode an empty chain");
    if (chain.alphabet_size < 2)
        throw InvalidArgument("arithmetic coding requires m >= 2");

    AdaptiveModel model(chain.alphabet_size, k);
    CodeInterval ic; // [0, 1)
    mpq_class width{1};

    for (Symbol s : chain.symbols) {
        const std::uint64_t den = model.denominator();
        const std::uint64_t cum = model.cum_below(s);
        const std::uint64_t num = model.numerator(s);
        const mpq_class step = width / static_cast<unsigned long>(den);
        ic.low += step * static_cast<unsigned long>(cum);
        width = step * static_cast<unsigned long>(num);
        model.advance(s);
    }
    ic.high = ic.low + width;

    const DyadicCode code = finalize_dyadic(ic);
    BitWriter writer;
    for (std::uint8_t b : code.bits) writer.put_bit(b);

    ReferenceEncodeResult result;
    result.blob.order = k;
    result.blob.alphabet = chain.alphabet_size;
    result.blob.chain_length = chain.size();
    result.blob.payload_bits = code.bit_count;
    result.blob.payload = writer.take_bytes();
    result.final_interval = ic;
    return result;
}

CodedBlob encode_reference(const SymbolChain& chain, std::uint32_t k) {
    return encode_reference_ex(chain, k).blob;
}

SymbolChain decode_reference(const CodedBlob& blob) {
    const std::uint32_t m = blob.alphabet;
    const std::uint64_t n = blob.chain_length;

    SymbolChain chain;
    chain.alphabet_size = m;
    if (n == 0) return chain;
    if (m == 1) { // degenerate alphabet: the chain is forced
        if (blob.payload_bits != 0)
            throw CorruptPayload("m=1 blob carries payload bits");
        chain.symbols.assign(n, 0);
        return chain;
    }
    if (blob.payload_bits == 0)
        throw CorruptPayload("empty payload for non-empty chain");
    if (blob.payload.size() < (blob.payload_bits + 7) / 8)
        throw CorruptPayload("payload shorter than declared bit count");

    // Reconstruct the coded dyadic; all-zero bits denote 1 (q = 2^L).
    const std::uint64_t L = blob.payload_bits;
    BitReader reader(blob.payload.data(), L);
    mpz_class q{0};
    for (std::uint64_t i = 0; i < L; ++i) {
        q <<= 1;
        if (reader.next_bit()) q |= 1;
    }
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(L));
    if (q == 0) q = pow2;
    const mpq_class value(q, pow2);

    AdaptiveModel model(m, blob.order);
    mpq_class low{0};
    mpq_class width{1};
    chain.symbols.reserve(n);

    for (std::uint64_t t = 0; t < n; ++t) {
        const std::uint64_t den = model.denominator();
        const mpq_class step = width / static_cast<unsigned long>(den);
        // value lies in (low, low+width]; pick the first subinterval whose
        // upper boundary reaches it.
        mpq_class upper = low;
        Symbol sym = m - 1;
        std::uint64_t num = 0;
        for (Symbol s = 0; s < m; ++s) {
            num = model.numerator(s);
            upper += step * static_cast<unsigned long>(num);
            if (value <= upper) {
                sym = s;
                break;
            }
        }
        low = upper - step * static_cast<unsigned long>(num);
        width = step * static_cast<unsigned long>(num);
        chain.symbols.push_back(sym);
        model.advance(sym);
    }
    return chain;
}

} // namespace paac
