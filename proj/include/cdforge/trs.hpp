#ifndef CDFORGE_TRS_HPP
#define CDFORGE_TRS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdforge/rules.hpp"

namespace cdforge {

/// Canonical triple comparator: by x, then z, then y. Monotone relabelling
/// preserves it, so restricting an assigned prefix to a subset of
/// alternatives yields an assigned prefix of the subset's triple list —
/// the property that makes prefix-keyed database lookups work.
struct TripleXzyLess {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.x != b.x) return a.x < b.x;
    if (a.z != b.z) return a.z < b.z;
    return a.y < b.y;
  }
};

/// All C(n,3) triples of 1..n in (x, z, y)-lexicographic order. This is the
/// internal indexing used everywhere; file output uses plain (x, y, z) order.
inline const std::vector<Triple>& triple_order(int n) {
  static const auto tables = [] {
    std::array<std::vector<Triple>, kMaxAlternatives + 1> t;
    for (int m = 3; m <= kMaxAlternatives; ++m) {
      for (Alternative x = 1; x <= m; ++x)
        for (Alternative y = x + 1; y <= m; ++y)
          for (Alternative z = y + 1; z <= m; ++z) t[m].emplace_back(x, y, z);
      std::sort(t[m].begin(), t[m].end(), TripleXzyLess{});
    }
    return t;
  }();
  if (n < 3 || n > kMaxAlternatives)
    throw std::invalid_argument("triple_order: n out of range 3..15");
  return tables[n];
}

inline std::size_t triple_count(int n) { return triple_order(n).size(); }

/// Slot index of `t` in triple_order(n).
inline std::size_t triple_index(int n, const Triple& t) {
  const auto& order = triple_order(n);
  auto it = std::lower_bound(order.begin(), order.end(), t, TripleXzyLess{});
  if (it == order.end() || *it != t)
    throw std::invalid_argument("triple not in range of n");
  return static_cast<std::size_t>(it - order.begin());
}

/// A triple-rule system: every triple of 1..n with an optional rule. A fully
/// assigned TRS defines a Condorcet domain; a partially assigned one, a
/// partial domain (unassigned triples impose no constraint).
class Trs {
 public:
  Trs() = default;
  explicit Trs(int n) : n_(n), slots_(triple_count(n)) {}

  int alternatives() const { return n_; }
  std::size_t slot_count() const { return slots_.size(); }

  const std::optional<NeverRule>& rule_at(std::size_t slot) const {
    return slots_.at(slot);
  }
  std::optional<NeverRule> rule_for(const Triple& t) const {
    return slots_.at(triple_index(n_, t));
  }

  void assign(std::size_t slot, NeverRule rule) { slots_.at(slot) = rule; }
  void assign(const Triple& t, NeverRule rule) { assign(triple_index(n_, t), rule); }
  void clear(std::size_t slot) { slots_.at(slot).reset(); }

  std::size_t assigned_count() const {
    std::size_t c = 0;
    for (const auto& s : slots_) c += s.has_value();
    return c;
  }
  bool fully_assigned() const { return assigned_count() == slots_.size(); }

  /// True when the assigned slots form a prefix of the triple order (the
  /// invariant maintained by the beam search).
  bool is_prefix_assigned() const {
    bool gap = false;
    for (const auto& s : slots_) {
      if (!s.has_value()) gap = true;
      else if (gap) return false;
    }
    return true;
  }
  std::size_t assigned_prefix_length() const {
    std::size_t k = 0;
    while (k < slots_.size() && slots_[k].has_value()) ++k;
    return k;
  }

  friend bool operator==(const Trs&, const Trs&) = default;

 private:
  int n_ = 0;
  std::vector<std::optional<NeverRule>> slots_;
};

/// Digit-string encoding of a TRS, one digit per slot in (x, z, y) order:
/// 0 unassigned, 1 = 1N3, 2 = 3N1, 3 = 2N1, 4 = 2N3. Frozen: database and
/// result files depend on it.
struct StateKey {
  std::string digits;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

inline constexpr std::string_view kDigitAlphabet = "0:-,1:1N3,2:3N1,3:2N1,4:2N3";

inline int rule_digit(NeverRule rule) {
  const auto alphabet = peak_pit_rules();
  for (int d = 1; d <= 4; ++d)
    if (alphabet[d - 1] == rule) return d;
  throw std::invalid_argument("rule " + rule.str() + " has no digit encoding");
}

inline StateKey encode_state(const Trs& trs) {
  StateKey key;
  key.digits.reserve(trs.slot_count());
  for (std::size_t s = 0; s < trs.slot_count(); ++s) {
    const auto& r = trs.rule_at(s);
    key.digits.push_back(r ? static_cast<char>('0' + rule_digit(*r)) : '0');
  }
  return key;
}

inline Trs decode_state(const StateKey& key, int n) {
  Trs trs(n);
  if (key.digits.size() != trs.slot_count())
    throw std::invalid_argument("state key length " + std::to_string(key.digits.size()) +
                                " does not match triple count " +
                                std::to_string(trs.slot_count()));
  for (std::size_t s = 0; s < key.digits.size(); ++s) {
    const char c = key.digits[s];
    if (c < '0' || c > '4')
      throw std::invalid_argument(std::string("invalid state digit '") + c + "'");
    if (c != '0') trs.assign(s, peak_pit_rules()[c - '1']);
  }
  return trs;
}

/// Restriction to an ascending subset of alternatives: keeps the triples
/// lying inside the subset, relabels members monotonically onto 1..k, and
/// carries rules unchanged.
inline Trs restrict_trs(const Trs& trs, std::span<const Alternative> subset) {
  const int n = trs.alternatives();
  const int k = static_cast<int>(subset.size());
  if (k < 3 || k > n) throw std::invalid_argument("restrict_trs: subset size out of range");
  std::uint8_t relabel[kMaxAlternatives + 1] = {};
  for (int i = 0; i < k; ++i) {
    Alternative a = subset[i];
    if (a < 1 || a > n) throw std::invalid_argument("restrict_trs: member out of range");
    if (i > 0 && a <= subset[i - 1])
      throw std::invalid_argument("restrict_trs: subset must be strictly ascending");
    relabel[a] = static_cast<std::uint8_t>(i + 1);
  }
  Trs out(k);
  const auto& triples = triple_order(n);
  for (std::size_t s = 0; s < triples.size(); ++s) {
    const Triple& t = triples[s];
    if (relabel[t.x] && relabel[t.y] && relabel[t.z]) {
      const Triple rt(relabel[t.x], relabel[t.y], relabel[t.z]);
      if (const auto& r = trs.rule_at(s)) out.assign(rt, *r);
    }
  }
  return out;
}

/// Fishburn's alternating scheme: middle alternative even -> 2N3, odd ->
/// 2N1. This is the convention that reproduces the published 20-order
/// domain on five alternatives; swapping the parities gives the
/// isomorphic twin.
inline Trs alternating_scheme_trs(int n) {
  Trs trs(n);
  const auto& triples = triple_order(n);
  for (std::size_t s = 0; s < triples.size(); ++s)
    trs.assign(s, triples[s].y % 2 == 0 ? rules::r2N3 : rules::r2N1);
  return trs;
}

}  // namespace cdforge

#endif  // CDFORGE_TRS_HPP
