#include "paac/counts.hpp"

namespace paac {

TransitionCounts count_transitions(const SymbolChain& chain, std::uint32_t k) {
    validate_chain(chain);
    TransitionCounts out{CountTable(chain.alphabet_size, k),
                         chain.symbols.size()};
    const std::size_t n = chain.symbols.size();
    if (n <= k) return out; // no position has a full context

    const ContextPacker& pack = out.table.packer();
    std::uint64_t ctx = 0;
    for (std::size_t t = 0; t < k; ++t) ctx = pack.push(ctx, chain.symbols[t]);
    for (std::size_t t = k; t < n; ++t) {
        out.table.add(ctx, chain.symbols[t]);
        ctx = pack.push(ctx, chain.symbols[t]);
    }
    return out;
}

} // namespace paac
