#pragma once

#include <cstdint>
#include <vector>

#include "paac/chain.hpp"

namespace paac {

// Ordered disjoint integer intervals covering [0, 255]. bounds has m+1
// entries with bounds[0] = 0 and bounds[m] = 256; interval j is
// [bounds[j], bounds[j+1]).
class Partition {
public:
    explicit Partition(std::vector<std::uint16_t> bounds);

    std::uint32_t cell_count() const {
        return static_cast<std::uint32_t>(bounds_.size() - 1);
    }
    std::uint16_t lower(std::uint32_t j) const { return bounds_[j]; }
    std::uint16_t upper(std::uint32_t j) const { return bounds_[j + 1]; }
    // Number of integers in interval j (A_j).
    std::uint32_t width(std::uint32_t j) const {
        return bounds_[j + 1] - bounds_[j];
    }
    std::uint32_t cell_of(std::uint32_t value) const {
        return cell_of_[value];
    }
    const std::vector<std::uint16_t>& bounds() const { return bounds_; }

private:
    std::vector<std::uint16_t> bounds_;
    std::vector<std::uint8_t> cell_of_; // 256 entries
};

// P(m): intervals [floor((j-1)*256/m), floor(j*256/m)).
Partition regular_partition(std::uint32_t m);

// y_i = index of the interval containing x_i. x must be a chain over [0,255].
SymbolChain cell_chain(const SymbolChain& x, const Partition& p);

// Fixed-length refinement cost: sum over cells of n_j * ceil(log2 A_j) bits.
std::uint64_t residual_bits(const SymbolChain& x, const Partition& p);

std::uint32_t ceil_log2(std::uint32_t v);

} // namespace paac
