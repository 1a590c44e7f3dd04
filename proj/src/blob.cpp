#include "paac/blob.hpp"

#include <cstring>

namespace paac {

namespace {
constexpr char kMagic[4] = {'P', 'A', 'C', '1'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 2 + 8 + 8;
} // namespace

void append_u16_be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 3; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint16_t read_u16_be(const std::uint8_t* p) {
    return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t read_u32_be(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | p[i];
    return v;
}

std::uint64_t read_u64_be(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
    return v;
}

std::vector<std::uint8_t> CodedBlob::serialize() const {
    if (order > 255)
        throw InvalidArgument("container order must fit in one byte");
    if (alphabet == 0 || alphabet > 0xFFFF)
        throw InvalidArgument("container alphabet must fit in two bytes");
    if (payload.size() != (payload_bits + 7) / 8)
        throw InvalidArgument("payload byte count does not match bit count");

    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(order));
    append_u16_be(out, static_cast<std::uint16_t>(alphabet));
    append_u64_be(out, chain_length);
    append_u64_be(out, payload_bits);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

CodedBlob CodedBlob::parse(const std::vector<std::uint8_t>& data,
                           std::size_t& offset) {
    if (data.size() < offset || data.size() - offset < kHeaderSize)
        throw BadContainer("truncated header");
    const std::uint8_t* p = data.data() + offset;
    if (std::memcmp(p, kMagic, 4) != 0) throw BadContainer("wrong magic");
    if (p[4] != kVersion)
        throw BadContainer("unsupported version " + std::to_string(p[4]));

    CodedBlob blob;
    blob.order = p[5];
    blob.alphabet = read_u16_be(p + 6);
    blob.chain_length = read_u64_be(p + 8);
    blob.payload_bits = read_u64_be(p + 16);
    if (blob.alphabet == 0) throw BadContainer("alphabet must be >= 1");

    const std::uint64_t payload_bytes = (blob.payload_bits + 7) / 8;
    if (data.size() - offset - kHeaderSize < payload_bytes)
        throw CorruptPayload("payload shorter than declared bit count");
    blob.payload.assign(p + kHeaderSize, p + kHeaderSize + payload_bytes);
    offset += kHeaderSize + payload_bytes;
    return blob;
}

CodedBlob CodedBlob::parse(const std::vector<std::uint8_t>& data) {
    std::size_t offset = 0;
    CodedBlob blob = parse(data, offset);
    if (offset != data.size())
        throw BadContainer("trailing bytes after payload");
    return blob;
}

} // namespace paac
