#ifndef CDFORGE_ORDER_HPP
#define CDFORGE_ORDER_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdforge {

using Alternative = int;

// Word-packing limit: one order fits a u64 at 4 bits per alternative.
inline constexpr int kMaxAlternatives = 15;

/// Single-character encoding used in domain files: 1-9, then A=10, B=11, ...
inline char alternative_char(Alternative a) {
  if (a < 1 || a > kMaxAlternatives)
    throw std::invalid_argument("alternative out of range 1..15: " + std::to_string(a));
  return a <= 9 ? static_cast<char>('0' + a) : static_cast<char>('A' + a - 10);
}

inline Alternative alternative_from_char(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("invalid alternative character '") + c + "'");
}

/// A voter's preference order: a permutation of 1..n, position 0 most
/// preferred. Packed into a single word (4 bits per position, position 0 in
/// the top nibble) so that numeric comparison equals lexicographic
/// comparison of the character encoding for orders of equal length.
class LinearOrder {
 public:
  LinearOrder() = default;

  static LinearOrder identity(int n) {
    check_n(n);
    LinearOrder o;
    o.n_ = static_cast<std::uint8_t>(n);
    for (int p = 0; p < n; ++p) o.set(p, p + 1);
    return o;
  }

  static LinearOrder from_sequence(std::span<const Alternative> seq) {
    const int n = static_cast<int>(seq.size());
    check_n(n);
    LinearOrder o;
    o.n_ = static_cast<std::uint8_t>(n);
    unsigned seen = 0;
    for (int p = 0; p < n; ++p) {
      Alternative a = seq[p];
      if (a < 1 || a > n)
        throw std::invalid_argument("order element out of range: " + std::to_string(a));
      if (seen & (1u << a))
        throw std::invalid_argument("duplicate alternative in order: " + std::to_string(a));
      seen |= 1u << a;
      o.set(p, a);
    }
    return o;
  }

  static LinearOrder from_packed(std::uint64_t packed, int n) {
    check_n(n);
    LinearOrder o;
    o.packed_ = packed;
    o.n_ = static_cast<std::uint8_t>(n);
    return o;
  }

  /// Parses the single-character encoding, e.g. "42513" or "123456789A".
  static LinearOrder parse(std::string_view text) {
    std::vector<Alternative> seq;
    seq.reserve(text.size());
    for (char c : text) seq.push_back(alternative_from_char(c));
    return from_sequence(seq);
  }

  int size() const { return n_; }
  std::uint64_t packed() const { return packed_; }

  /// Alternative at preference position p (0 = most preferred).
  Alternative at(int p) const {
    return static_cast<Alternative>((packed_ >> shift(p)) & 0xF);
  }

  /// Preference position of alternative a; a must be present.
  int position_of(Alternative a) const {
    for (int p = 0; p < n_; ++p)
      if (at(p) == a) return p;
    throw std::invalid_argument("alternative not in order: " + std::to_string(a));
  }

  /// New order with `a` inserted at position `pos` (existing entries at
  /// pos.. shift down one place).
  LinearOrder insert(int pos, Alternative a) const {
    LinearOrder o;
    o.n_ = static_cast<std::uint8_t>(n_ + 1);
    const std::uint64_t low_mask = pos == 0 ? ~0ull : (~0ull >> (4 * pos));
    o.packed_ = (packed_ & ~low_mask) | (std::uint64_t(a) << shift(pos)) |
                ((packed_ & low_mask) >> 4);
    return o;
  }

  std::vector<Alternative> sequence() const {
    std::vector<Alternative> seq(n_);
    for (int p = 0; p < n_; ++p) seq[p] = at(p);
    return seq;
  }

  std::string str() const {
    std::string s;
    s.reserve(n_);
    for (int p = 0; p < n_; ++p) s.push_back(alternative_char(at(p)));
    return s;
  }

  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

 private:
  static int shift(int p) { return 4 * (15 - p); }
  static void check_n(int n) {
    if (n < 1 || n > kMaxAlternatives)
      throw std::invalid_argument("order length out of range 1..15: " + std::to_string(n));
  }
  void set(int p, Alternative a) {
    packed_ = (packed_ & ~(0xFull << shift(p))) | (std::uint64_t(a) << shift(p));
  }

  std::uint64_t packed_ = 0;
  std::uint8_t n_ = 0;
};

/// Number of discordant pairs between two orders over the same alternatives
/// (equivalently, the minimal number of adjacent transpositions turning one
/// into the other).
inline int kendall_distance(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kendall_distance: orders of different length");
  const int n = a.size();
  int pos_b[kMaxAlternatives + 1] = {};
  for (int p = 0; p < n; ++p) pos_b[b.at(p)] = p;
  int d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pos_b[a.at(i)] > pos_b[a.at(j)]) ++d;
  return d;
}

namespace detail {

// Restrict a packed order to the alternatives selected by `member_mask`
// (bit a set = alternative a kept), relabelling via `relabel`. The result
// packs k = popcount(member_mask) positions.
inline std::uint64_t restrict_packed(std::uint64_t packed, int n,
                                     unsigned member_mask,
                                     const std::uint8_t* relabel) {
  std::uint64_t out = 0;
  int outp = 0;
  for (int p = 0; p < n; ++p) {
    const auto a = (packed >> (4 * (15 - p))) & 0xF;
    if (member_mask & (1u << a)) {
      out |= std::uint64_t(relabel[a]) << (4 * (15 - outp));
      ++outp;
    }
  }
  return out;
}

}  // namespace detail

/// Restriction of this order to an ascending subset of its alternatives,
/// relabelled monotonically onto 1..k.
inline LinearOrder restrict_order(const LinearOrder& order,
                                  std::span<const Alternative> subset) {
  unsigned mask = 0;
  std::uint8_t relabel[kMaxAlternatives + 1] = {};
  int next = 1;
  for (Alternative a : subset) {
    if (a < 1 || a > order.size())
      throw std::invalid_argument("subset member out of range: " + std::to_string(a));
    if (next > 1 && a <= subset[next - 2])
      throw std::invalid_argument("subset must be strictly ascending");
    mask |= 1u << a;
    relabel[a] = static_cast<std::uint8_t>(next++);
  }
  return LinearOrder::from_packed(
      detail::restrict_packed(order.packed(), order.size(), mask, relabel),
      static_cast<int>(subset.size()));
}

}  // namespace cdforge

#endif  // CDFORGE_ORDER_HPP
