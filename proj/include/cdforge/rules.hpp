#ifndef CDFORGE_RULES_HPP
#define CDFORGE_RULES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cdforge/order.hpp"

namespace cdforge {

/// Three alternatives x < y < z.
struct Triple {
  Alternative x = 0, y = 0, z = 0;

  Triple() = default;
  Triple(Alternative x_, Alternative y_, Alternative z_) : x(x_), y(y_), z(z_) {
    if (!(1 <= x && x < y && y < z))
      throw std::invalid_argument("triple must satisfy 1 <= x < y < z");
  }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A never rule iNj: the i-th smallest alternative of a triple must not be
/// the j-th of the triple's members to appear in an order. All nine i,j
/// combinations are representable; searching uses the four peak-pit rules.
class NeverRule {
 public:
  constexpr NeverRule(int rank, int place)
      : rank_(static_cast<std::uint8_t>(rank)), place_(static_cast<std::uint8_t>(place)) {
    if (rank < 1 || rank > 3 || place < 1 || place > 3)
      throw std::invalid_argument("never rule indices must be in 1..3");
  }

  constexpr int rank() const { return rank_; }
  constexpr int place() const { return place_; }

  std::string str() const {
    return std::string(1, static_cast<char>('0' + rank_)) + "N" +
           static_cast<char>('0' + place_);
  }

  static NeverRule parse(std::string_view token) {
    if (token.size() != 3 || token[1] != 'N' || token[0] < '1' || token[0] > '3' ||
        token[2] < '1' || token[2] > '3')
      throw std::invalid_argument("unknown rule token: " + std::string(token));
    return NeverRule(token[0] - '0', token[2] - '0');
  }

  friend constexpr auto operator<=>(const NeverRule&, const NeverRule&) = default;

 private:
  std::uint8_t rank_;
  std::uint8_t place_;
};

namespace rules {
inline constexpr NeverRule r1N3{1, 3};
inline constexpr NeverRule r3N1{3, 1};
inline constexpr NeverRule r2N1{2, 1};
inline constexpr NeverRule r2N3{2, 3};
inline constexpr NeverRule r1N2{1, 2};
inline constexpr NeverRule r3N2{3, 2};
}  // namespace rules

/// The search alphabet, in digit order (digit d <-> peak_pit_rules()[d-1]).
inline constexpr std::array<NeverRule, 4> peak_pit_rules() {
  return {rules::r1N3, rules::r3N1, rules::r2N1, rules::r2N3};
}

/// Peak-pit rules plus 1N2 and 3N2 (the six rules preserving unitarity).
inline constexpr std::array<NeverRule, 6> unitary_rules() {
  return {rules::r1N3, rules::r3N1, rules::r2N1, rules::r2N3,
          rules::r1N2, rules::r3N2};
}

namespace detail {

// Rule check from a position table (pos[a] = preference position of a).
inline bool rule_allows_pos(const int* pos, Triple t, NeverRule rule) {
  const Alternative ranked = rule.rank() == 1 ? t.x : rule.rank() == 2 ? t.y : t.z;
  const Alternative o1 = ranked == t.x ? t.y : t.x;
  const Alternative o2 = ranked == t.z ? t.y : t.z;
  const int place = 1 + (pos[o1] < pos[ranked]) + (pos[o2] < pos[ranked]);
  return place != rule.place();
}

}  // namespace detail

/// True unless, among the triple's members in their order of appearance
/// within `order`, the rule's rank-th smallest member sits at the rule's
/// forbidden place.
inline bool rule_allows(const LinearOrder& order, Triple t, NeverRule rule) {
  if (t.z > order.size())
    throw std::invalid_argument("triple member exceeds order length");
  int pos[kMaxAlternatives + 1];
  for (int p = 0; p < order.size(); ++p) pos[order.at(p)] = p;
  return detail::rule_allows_pos(pos, t, rule);
}

}  // namespace cdforge

#endif  // CDFORGE_RULES_HPP
