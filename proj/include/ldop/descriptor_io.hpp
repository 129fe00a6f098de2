#pragma once

#include "ldop/encoder.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ldop {

struct DescriptorRecord {
    std::string id;    // image path
    std::string label; // class label
    Descriptor descriptor;

    friend bool operator==(const DescriptorRecord&, const DescriptorRecord&) = default;
};

/// Binary descriptor file, all integers little-endian:
///
///   "LDOPDESC"             8 bytes
///   version                u16 (= 1)
///   N                      u8
///   segment count S        u16
///   S x (kind u8, R u8)    kind 0 = LDOP, 1 = LBP
///   record count           u32
///   per record:
///     label                u16 length + UTF-8 bytes
///     id                   u16 length + UTF-8 bytes
///     S * 2^N values       f64
///
/// All records share the header layout.
inline constexpr std::uint16_t kDescriptorFormatVersion = 1;

[[nodiscard]] std::vector<std::uint8_t> encode_descriptors(std::span<const DescriptorRecord> records);
[[nodiscard]] std::vector<DescriptorRecord> decode_descriptors(std::span<const std::uint8_t> bytes);

void write_descriptors(const std::filesystem::path& path, std::span<const DescriptorRecord> records);
[[nodiscard]] std::vector<DescriptorRecord> read_descriptors(const std::filesystem::path& path);

/// One row per record: id, then every value at full precision.
void write_descriptor_csv(std::ostream& out, std::span<const DescriptorRecord> records);

} // namespace ldop
