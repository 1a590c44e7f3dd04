#include "paac/sampler.hpp"

#include <cmath>

#include "paac/rng.hpp"

namespace paac {
namespace {

constexpr double kRowSumTol = 1e-9;

// Packed key of the context (digits most-significant-first in time).
std::uint64_t key_of_digits(const std::vector<Symbol>& digits,
                            const ContextPacker& pack) {
    std::uint64_t key = 0;
    for (Symbol d : digits) key = pack.push(key, d);
    return key;
}

bool next_context(std::vector<Symbol>& digits, std::uint32_t m) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < m) return true;
        digits[i] = 0;
    }
    return false;
}

} // namespace

ThetaParam random_theta(std::uint32_t m, std::uint32_t k,
                        double concentration, std::uint64_t seed) {
    if (m < 2) throw InvalidArgument("random_theta requires m >= 2");
    if (!(concentration > 0.0))
        throw InvalidArgument("concentration must be > 0");

    const ContextPacker pack(m, k);
    const std::uint64_t slots = std::uint64_t{1} << pack.key_bits();
    if (slots > (std::uint64_t{1} << 26) / m)
        throw ModelTooLarge("theta table for m=" + std::to_string(m) +
                            ", k=" + std::to_string(k));

    ThetaParam theta;
    theta.order = k;
    theta.alphabet = m;
    theta.key_bits = pack.key_bits();
    theta.probs.assign(slots * m, 0.0);
    theta.defined.assign(slots, 0);

    Rng rng(seed);
    std::vector<double> gammas(m);
    std::vector<Symbol> digits(k, 0);
    // Enumerate the m^k real contexts in lexicographic order so the draw
    // sequence does not depend on key packing.
    do {
        const std::uint64_t ctx = key_of_digits(digits, pack);
        double sum = 0.0;
        for (std::uint32_t i = 0; i < m; ++i) {
            gammas[i] = rng.gamma(concentration);
            sum += gammas[i];
        }
        for (std::uint32_t i = 0; i < m; ++i)
            theta.probs[ctx * m + i] = gammas[i] / sum;
        theta.defined[ctx] = 1;
    } while (next_context(digits, m));
    return theta;
}

SymbolChain sample_mmc(const ThetaParam& theta, std::uint64_t n,
                       std::uint64_t seed) {
    const std::uint32_t m = theta.alphabet;
    const std::uint32_t k = theta.order;
    if (m == 0) throw InvalidArgument("theta has empty alphabet");

    // Every real context must carry a valid distribution.
    const ContextPacker pack(m, k);
    std::vector<Symbol> digits(k, 0);
    do {
        const std::uint64_t ctx = key_of_digits(digits, pack);
        if (!theta.is_defined(ctx))
            throw InvalidArgument("theta undefined for some context");
        double sum = 0.0;
        for (Symbol s = 0; s < m; ++s) sum += theta.prob(ctx, s);
        if (std::fabs(sum - 1.0) > kRowSumTol)
            throw InvalidArgument("theta row does not sum to 1");
    } while (next_context(digits, m));

    Rng rng(seed);
    SymbolChain chain;
    chain.alphabet_size = m;
    chain.symbols.reserve(n);
    std::uint64_t ctx = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        Symbol s;
        if (t < k) {
            s = static_cast<Symbol>(rng.uniform01() * m);
            if (s >= m) s = m - 1;
        } else {
            const double u = rng.uniform01();
            double cum = 0.0;
            s = m - 1;
            for (Symbol i = 0; i < m; ++i) {
                cum += theta.prob(ctx, i);
                if (u < cum) {
                    s = i;
                    break;
                }
            }
        }
        chain.symbols.push_back(s);
        ctx = pack.push(ctx, s);
    }
    return chain;
}

} // namespace paac
