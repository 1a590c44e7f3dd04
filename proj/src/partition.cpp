#include "paac/partition.hpp"

#include <bit>

#include "paac/errors.hpp"

namespace paac {

std::uint32_t ceil_log2(std::uint32_t v) {
    if (v == 0) throw InvalidArgument("ceil_log2(0)");
    return static_cast<std::uint32_t>(std::bit_width(v - 1));
}

Partition::Partition(std::vector<std::uint16_t> bounds)
    : bounds_(std::move(bounds)) {
    if (bounds_.size() < 2 || bounds_.front() != 0 || bounds_.back() != 256)
        throw InvalidArgument("partition must cover [0,255]");
    for (std::size_t j = 1; j < bounds_.size(); ++j)
        if (bounds_[j] <= bounds_[j - 1])
            throw InvalidArgument("partition bounds must be strictly ascending");

    cell_of_.resize(256);
    std::uint32_t j = 0;
    for (std::uint32_t v = 0; v < 256; ++v) {
        while (v >= bounds_[j + 1]) ++j;
        cell_of_[v] = static_cast<std::uint8_t>(j);
    }
}

Partition regular_partition(std::uint32_t m) {
    if (m < 1 || m > 256)
        throw InvalidArgument("partition size must be in [1, 256]");
    std::vector<std::uint16_t> bounds(m + 1);
    for (std::uint32_t j = 0; j <= m; ++j)
        bounds[j] = static_cast<std::uint16_t>(
            (static_cast<std::uint64_t>(j) * 256) / m);
    return Partition(std::move(bounds));
}

SymbolChain cell_chain(const SymbolChain& x, const Partition& p) {
    if (x.alphabet_size > 256)
        throw InvalidArgument("cell_chain expects a chain over [0,255]");
    SymbolChain y;
    y.alphabet_size = p.cell_count();
    y.symbols.reserve(x.size());
    for (Symbol s : x.symbols) y.symbols.push_back(p.cell_of(s));
    return y;
}

std::uint64_t residual_bits(const SymbolChain& x, const Partition& p) {
    std::vector<std::uint64_t> occupancy(p.cell_count(), 0);
    for (Symbol s : x.symbols) occupancy[p.cell_of(s)]++;
    std::uint64_t bits = 0;
    for (std::uint32_t j = 0; j < p.cell_count(); ++j)
        bits += occupancy[j] * ceil_log2(p.width(j));
    return bits;
}

} // namespace paac
