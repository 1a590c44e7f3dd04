#pragma once

#include <cstdint>
#include <vector>

#include "paac/errors.hpp"

namespace paac {

// MSB-first bit writer; bytes are zero-padded on finish.
class BitWriter {
public:
    void put_bit(std::uint32_t bit) {
        const std::size_t byte_idx = bit_count_ / 8;
        if (byte_idx >= bytes_.size()) bytes_.push_back(0);
        if (bit & 1u)
            bytes_[byte_idx] |=
                static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
        ++bit_count_;
    }

    // value's low nbits, most significant first.
    void put_bits(std::uint64_t value, std::uint32_t nbits) {
        for (std::uint32_t i = nbits; i-- > 0;)
            put_bit(static_cast<std::uint32_t>((value >> i) & 1u));
    }

    std::uint64_t bit_count() const { return bit_count_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take_bytes() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bit_count_ = 0;
};

// MSB-first reader over a fixed window of total_bits; reads past the end
// return zero bits (the arithmetic decoder relies on this).
class BitReader {
public:
    BitReader(const std::uint8_t* data, std::uint64_t total_bits)
        : data_(data), total_bits_(total_bits) {}

    std::uint32_t next_bit() {
        if (pos_ >= total_bits_) {
            ++pos_;
            return 0;
        }
        const std::uint8_t byte = data_[pos_ / 8];
        const std::uint32_t bit = (byte >> (7 - pos_ % 8)) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t read_bits(std::uint32_t nbits) {
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < nbits; ++i) v = (v << 1) | next_bit();
        return v;
    }

    std::uint64_t position() const { return pos_; }

private:
    const std::uint8_t* data_;
    std::uint64_t total_bits_;
    std::uint64_t pos_ = 0;
};

} // namespace paac
