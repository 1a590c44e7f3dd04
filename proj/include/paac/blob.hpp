#pragma once

#include <cstdint>
#include <vector>

#include "paac/errors.hpp"

namespace paac {

// Self-describing bitstream container.
//
// Layout, all integers big-endian:
//   magic "PAC1" (4) | version 0x01 (1) | k (1) | m (2) | n (8) |
//   payload_bit_count (8) | payload, MSB-first, zero-padded to a byte.
struct CodedBlob {
    std::uint32_t order = 0;        // k, <= 255 in the container
    std::uint32_t alphabet = 0;     // m
    std::uint64_t chain_length = 0; // n
    std::uint64_t payload_bits = 0;
    std::vector<std::uint8_t> payload;

    std::vector<std::uint8_t> serialize() const;

    // Parses and validates one blob starting at data[offset]; advances
    // offset past it. Throws BadContainer / CorruptPayload.
    static CodedBlob parse(const std::vector<std::uint8_t>& data,
                           std::size_t& offset);
    static CodedBlob parse(const std::vector<std::uint8_t>& data);
};

void append_u16_be(std::vector<std::uint8_t>& out, std::uint16_t v);
void append_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v);
void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v);
std::uint16_t read_u16_be(const std::uint8_t* p);
std::uint32_t read_u32_be(const std::uint8_t* p);
std::uint64_t read_u64_be(const std::uint8_t* p);

} // namespace paac
