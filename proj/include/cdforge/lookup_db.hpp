#ifndef CDFORGE_LOOKUP_DB_HPP
#define CDFORGE_LOOKUP_DB_HPP

#include <array>
#include <bitset>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdforge/detail/checksum.hpp"
#include "cdforge/domain.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

class db_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Five-alternative lookup database. For every assigned prefix of the ten
/// triple slots (digits 1..4 per slot), stores the largest full-domain size
/// reachable by completing the assignment; at full length ten, the exact
/// domain size. Level k is a dense table of 4^k entries indexed by the
/// base-4 number formed from (digit-1) per slot, first slot most
/// significant — so the children of prefix p sit at p*4+0..3.
class LookupDb {
 public:
  static constexpr int kSlots = 10;  // C(5,3)
  static constexpr std::uint16_t kFormatVersion = 1;
  static constexpr char kMagic[6] = {'C', 'D', '5', 'D', 'B', '\0'};

  LookupDb() = default;

  bool empty() const { return levels_[0].empty(); }

  std::uint16_t value_at(int level, std::uint32_t index) const {
    return levels_[level][index];
  }

  /// Looks up a prefix-form key: assigned digits first, then only zeros.
  /// Shorter keys are treated as fully assigned prefixes.
  std::uint16_t lookup(std::string_view digits) const {
    if (digits.size() > kSlots)
      throw std::invalid_argument("lookup: key longer than ten digits");
    int k = 0;
    std::uint32_t index = 0;
    bool in_zeros = false;
    for (char c : digits) {
      if (c < '0' || c > '4')
        throw std::invalid_argument(std::string("lookup: invalid digit '") + c + "'");
      if (c == '0') {
        in_zeros = true;
      } else {
        if (in_zeros)
          throw std::invalid_argument(
              "lookup: assigned digit after an unassigned slot (not a prefix key)");
        index = index * 4 + static_cast<std::uint32_t>(c - '1');
        ++k;
      }
    }
    return levels_[k][index];
  }
  std::uint16_t lookup(const StateKey& key) const { return lookup(key.digits); }

  const std::vector<std::uint16_t>& level(int k) const { return levels_[k]; }

  /// Hash of the frozen rule-to-digit alphabet; stored in the file header so
  /// a database built under a different encoding is rejected on load.
  static std::uint64_t alphabet_fingerprint() {
    return detail::fnv1a64(kDigitAlphabet);
  }

  friend LookupDb build_db();
  friend LookupDb load_db(const std::filesystem::path&);

 private:
  std::array<std::vector<std::uint16_t>, kSlots + 1> levels_;
};

namespace detail {

inline std::size_t db_level_size(int k) { return std::size_t{1} << (2 * k); }

// The 120 orders of S5 and, per (slot, digit), the set of orders the rule
// allows. Domain filtering then reduces to bitwise AND.
struct FiveAltTables {
  std::array<std::array<std::bitset<120>, 4>, LookupDb::kSlots> allowed;

  FiveAltTables() {
    std::vector<LinearOrder> orders;
    std::vector<Alternative> seq{1, 2, 3, 4, 5};
    do {
      orders.push_back(LinearOrder::from_sequence(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    const auto& triples = triple_order(5);
    for (int s = 0; s < LookupDb::kSlots; ++s)
      for (int d = 0; d < 4; ++d)
        for (std::size_t o = 0; o < orders.size(); ++o)
          if (rule_allows(orders[o], triples[s], peak_pit_rules()[d]))
            allowed[s][d].set(o);
  }
};

}  // namespace detail

/// Builds the full database: 4^10 leaves evaluated with shared prefix
/// domains (depth-first, one AND per edge of the assignment tree), interior
/// values by max over the four children.
inline LookupDb build_db() {
  const detail::FiveAltTables tables;
  LookupDb db;
  for (int k = 0; k <= LookupDb::kSlots; ++k)
    db.levels_[k].assign(detail::db_level_size(k), 0);

  auto rec = [&](auto&& self, int k, std::uint32_t index,
                 const std::bitset<120>& alive) -> std::uint16_t {
    std::uint16_t v;
    if (k == LookupDb::kSlots) {
      v = static_cast<std::uint16_t>(alive.count());
    } else {
      v = 0;
      for (int d = 0; d < 4; ++d) {
        const std::uint16_t c = self(self, k + 1, index * 4 + d, alive & tables.allowed[k][d]);
        if (c > v) v = c;
      }
    }
    db.levels_[k][index] = v;
    return v;
  };
  std::bitset<120> all;
  all.set();
  rec(rec, 0, 0, all);
  return db;
}

/// Binary layout: magic, u16 format version, u64 alphabet fingerprint,
/// eleven u64 level byte-offsets, the level value arrays (u16), trailing
/// CRC-32 over everything before it. All integers little-endian.
inline void save_db(const LookupDb& db, const std::filesystem::path& path) {
  std::vector<unsigned char> buf;
  buf.reserve(3u << 20);
  auto put_u16 = [&](std::uint16_t v) {
    buf.push_back(static_cast<unsigned char>(v & 0xFF));
    buf.push_back(static_cast<unsigned char>(v >> 8));
  };
  auto put_u64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<unsigned char>(v >> (8 * i)));
  };

  buf.insert(buf.end(), std::begin(LookupDb::kMagic), std::end(LookupDb::kMagic));
  put_u16(LookupDb::kFormatVersion);
  put_u64(LookupDb::alphabet_fingerprint());
  std::size_t offset = buf.size() + 8 * (LookupDb::kSlots + 1);
  for (int k = 0; k <= LookupDb::kSlots; ++k) {
    put_u64(offset);
    offset += 2 * detail::db_level_size(k);
  }
  for (int k = 0; k <= LookupDb::kSlots; ++k)
    for (std::uint16_t v : db.level(k)) put_u16(v);
  const std::uint32_t crc = detail::crc32(buf);
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<unsigned char>(crc >> (8 * i)));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

inline LookupDb load_db(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open database " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());

  std::size_t expected = sizeof(LookupDb::kMagic) + 2 + 8 + 8 * (LookupDb::kSlots + 1) + 4;
  for (int k = 0; k <= LookupDb::kSlots; ++k) expected += 2 * detail::db_level_size(k);
  if (buf.size() < expected)
    throw db_format_error(path.string() + ": truncated database file (" +
                          std::to_string(buf.size()) + " of " + std::to_string(expected) +
                          " bytes)");
  if (buf.size() > expected)
    throw db_format_error(path.string() + ": trailing bytes after database payload");

  auto get_u16 = [&](std::size_t at) {
    return static_cast<std::uint16_t>(buf[at] | (buf[at + 1] << 8));
  };
  auto get_u64 = [&](std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(buf[at + i]) << (8 * i);
    return v;
  };

  if (!std::equal(std::begin(LookupDb::kMagic), std::end(LookupDb::kMagic), buf.begin()))
    throw db_format_error(path.string() + ": bad magic (not a cd5 database)");
  std::size_t at = sizeof(LookupDb::kMagic);
  if (get_u16(at) != LookupDb::kFormatVersion)
    throw db_format_error(path.string() + ": unsupported format version " +
                          std::to_string(get_u16(at)));
  at += 2;
  if (get_u64(at) != LookupDb::alphabet_fingerprint())
    throw db_format_error(path.string() + ": digit-alphabet fingerprint mismatch");
  at += 8;

  std::uint32_t stored_crc = 0;
  for (int i = 0; i < 4; ++i)
    stored_crc |= std::uint32_t(buf[buf.size() - 4 + i]) << (8 * i);
  const std::uint32_t actual_crc =
      detail::crc32({buf.data(), buf.size() - 4});
  if (stored_crc != actual_crc)
    throw db_format_error(path.string() + ": checksum failure");

  LookupDb db;
  for (int k = 0; k <= LookupDb::kSlots; ++k, at += 8) {
    const std::uint64_t off = get_u64(at);
    const std::size_t count = detail::db_level_size(k);
    if (off + 2 * count > buf.size() - 4)
      throw db_format_error(path.string() + ": level offset out of range");
    db.levels_[k].resize(count);
    for (std::size_t i = 0; i < count; ++i)
      db.levels_[k][i] = get_u16(static_cast<std::size_t>(off) + 2 * i);
  }
  return db;
}

}  // namespace cdforge

#endif  // CDFORGE_LOOKUP_DB_HPP
