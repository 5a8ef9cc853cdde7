#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nfl/table_function.hpp"

namespace nfl {

/// IEEE CRC-32 (reflected 0xEDB88320, init and final xor 0xFFFFFFFF).
std::uint32_t crc32(std::span<const std::uint8_t> data);

/// Bit-exact table format: magic "NFLF", version byte, one byte n, one byte
/// m, 2^n values of ceil(m/8) bytes each little-endian, then the CRC-32 of
/// that payload as 4 little-endian bytes.
std::vector<std::uint8_t> table_to_bytes(const TableFunction& t);

/// Inverse of table_to_bytes. Throws std::runtime_error naming `origin` on
/// bad magic, version, size, checksum, or out-of-range entries.
TableFunction table_from_bytes(std::span<const std::uint8_t> bytes,
                               const std::string& origin);

void save_table(const TableFunction& t, const std::filesystem::path& path);
TableFunction load_table(const std::filesystem::path& path);

}  // namespace nfl
