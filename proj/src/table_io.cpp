#include "nfl/table_io.hpp"

#include <array>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "nfl/version.hpp"

namespace nfl {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'N', 'F', 'L', 'F'};

std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k)
      c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    table[i] = c;
  }
  return table;
}

[[noreturn]] void load_fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> data) {
  static const std::array<std::uint32_t, 256> table = make_crc_table();
  std::uint32_t c = 0xFFFFFFFFu;
  for (std::uint8_t byte : data) c = table[(c ^ byte) & 0xFFu] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

std::vector<std::uint8_t> table_to_bytes(const TableFunction& t) {
  validate(t);
  const int value_bytes = (t.m + 7) / 8;
  std::vector<std::uint8_t> out;
  out.reserve(8 + t.values.size() * static_cast<std::size_t>(value_bytes));
  for (std::uint8_t byte : kMagic) out.push_back(byte);
  out.push_back(kTableFormatVersion);
  out.push_back(static_cast<std::uint8_t>(t.n));
  out.push_back(static_cast<std::uint8_t>(t.m));
  const std::size_t payload_start = out.size();
  for (std::uint64_t v : t.values)
    for (int byte = 0; byte < value_bytes; ++byte)
      out.push_back(static_cast<std::uint8_t>(v >> (8 * byte)));
  const std::uint32_t sum =
      crc32({out.data() + payload_start, out.size() - payload_start});
  for (int byte = 0; byte < 4; ++byte)
    out.push_back(static_cast<std::uint8_t>(sum >> (8 * byte)));
  return out;
}

TableFunction table_from_bytes(std::span<const std::uint8_t> bytes,
                               const std::string& origin) {
  if (bytes.size() < 11) load_fail(origin, "file too short for a table header");
  for (std::size_t i = 0; i < kMagic.size(); ++i)
    if (bytes[i] != kMagic[i]) load_fail(origin, "bad magic bytes, not a table file");
  if (bytes[4] != kTableFormatVersion)
    load_fail(origin, "unsupported table format version " +
                          std::to_string(int{bytes[4]}));
  const int n = bytes[5];
  const int m = bytes[6];
  if (n < 1 || n > 30) load_fail(origin, "table input width out of range");
  if (m < 1 || m > 64) load_fail(origin, "table output width out of range");
  const std::size_t count = std::size_t{1} << n;
  const std::size_t value_bytes = static_cast<std::size_t>((m + 7) / 8);
  const std::size_t payload_size = count * value_bytes;
  if (bytes.size() != 7 + payload_size + 4)
    load_fail(origin, "file size does not match the declared dimensions");
  const std::span<const std::uint8_t> payload = bytes.subspan(7, payload_size);
  std::uint32_t stored = 0;
  for (int byte = 0; byte < 4; ++byte)
    stored |= std::uint32_t{bytes[7 + payload_size + byte]} << (8 * byte);
  if (crc32(payload) != stored) load_fail(origin, "payload checksum mismatch");

  TableFunction t{n, m, {}};
  t.values.resize(count);
  const std::uint64_t mask = TableFunction::value_mask(m);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t v = 0;
    for (std::size_t byte = 0; byte < value_bytes; ++byte)
      v |= std::uint64_t{payload[i * value_bytes + byte]} << (8 * byte);
    if ((v & ~mask) != 0) load_fail(origin, "table entry exceeds m bits");
    t.values[i] = v;
  }
  return t;
}

void save_table(const TableFunction& t, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = table_to_bytes(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

TableFunction load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error(path.string() + ": read failed");
  return table_from_bytes(bytes, path.string());
}

}  // namespace nfl
