#ifndef CDFORGE_DOMAIN_HPP
#define CDFORGE_DOMAIN_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdforge/order.hpp"
#include "cdforge/rules.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

/// An immutable set of linear orders over 1..n, stored as sorted unique
/// packed words (so iteration order is the canonical lexicographic one).
class Domain {
 public:
  Domain() = default;

  static Domain from_orders(int n, std::span<const LinearOrder> orders) {
    std::vector<std::uint64_t> packed;
    packed.reserve(orders.size());
    for (const auto& o : orders) {
      if (o.size() != n) throw std::invalid_argument("order length differs from domain n");
      packed.push_back(o.packed());
    }
    return from_packed(n, std::move(packed));
  }

  static Domain from_packed(int n, std::vector<std::uint64_t> packed) {
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    Domain d;
    d.n_ = n;
    d.packed_ = std::move(packed);
    return d;
  }

  int alternatives() const { return n_; }
  std::size_t size() const { return packed_.size(); }
  bool empty() const { return packed_.empty(); }

  LinearOrder at(std::size_t i) const { return LinearOrder::from_packed(packed_.at(i), n_); }

  bool contains(const LinearOrder& o) const {
    return std::binary_search(packed_.begin(), packed_.end(), o.packed());
  }

  const std::vector<std::uint64_t>& packed() const { return packed_; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> packed_;
};

namespace detail {

// One extension step of the incremental builder: insert alternative `m`
// into every gap of every order on 1..m-1, keeping insertions that satisfy
// the assigned rules whose largest member is m. Rules on triples inside
// 1..m-1 are untouched by the insertion, so no other checks are needed.
inline std::vector<std::uint64_t> extend_orders(
    const std::vector<std::uint64_t>& base, int m,
    std::span<const std::pair<Triple, NeverRule>> top_rules) {
  std::vector<std::uint64_t> out;
  out.reserve(base.size() * m);
  int pos[kMaxAlternatives + 2];
  for (std::uint64_t packed : base) {
    const LinearOrder order = LinearOrder::from_packed(packed, m - 1);
    for (int gap = 0; gap < m; ++gap) {
      const LinearOrder cand = order.insert(gap, m);
      for (int p = 0; p < m; ++p) pos[cand.at(p)] = p;
      bool ok = true;
      for (const auto& [t, r] : top_rules) {
        if (!rule_allows_pos(pos, t, r)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(cand.packed());
    }
  }
  return out;
}

}  // namespace detail

/// The set of orders satisfying every assigned rule of `trs`, built by
/// incremental extension (grow the domain on 1..m, then insert m+1 into
/// every gap, checking only the rules whose largest member is m+1). Equal
/// to filtering all n! orders, without ever enumerating them.
inline Domain build_domain(const Trs& trs, int size_cap = kMaxAlternatives) {
  const int n = trs.alternatives();
  if (n < 3) throw std::invalid_argument("build_domain: need at least 3 alternatives");
  if (n > kMaxAlternatives || n > size_cap)
    throw std::invalid_argument("build_domain: n=" + std::to_string(n) +
                                " exceeds the size cap " +
                                std::to_string(std::min(size_cap, kMaxAlternatives)));

  const auto& triples = triple_order(n);
  std::vector<std::vector<std::pair<Triple, NeverRule>>> by_top(n + 1);
  for (std::size_t s = 0; s < triples.size(); ++s)
    if (const auto& r = trs.rule_at(s)) by_top[triples[s].z].emplace_back(triples[s], *r);

  std::vector<std::uint64_t> cur{LinearOrder::parse("12").packed(),
                                 LinearOrder::parse("21").packed()};
  for (int m = 3; m <= n; ++m) cur = detail::extend_orders(cur, m, by_top[m]);
  return Domain::from_packed(n, std::move(cur));
}

/// Orders filtered to the subset's alternatives, relabelled monotonically
/// onto 1..k, deduplicated. `subset` must be strictly ascending; the full
/// set 1..n gives back the domain itself.
inline Domain restrict_domain(const Domain& domain, std::span<const Alternative> subset) {
  const int n = domain.alternatives();
  const int k = static_cast<int>(subset.size());
  if (k < 3) throw std::invalid_argument("restrict_domain: subset smaller than 3");
  if (k > n) throw std::invalid_argument("restrict_domain: subset larger than domain");
  unsigned mask = 0;
  std::uint8_t relabel[kMaxAlternatives + 1] = {};
  for (int i = 0; i < k; ++i) {
    Alternative a = subset[i];
    if (a < 1 || a > n) throw std::invalid_argument("restrict_domain: member out of range");
    if (i > 0 && a <= subset[i - 1])
      throw std::invalid_argument("restrict_domain: subset must be strictly ascending");
    mask |= 1u << a;
    relabel[a] = static_cast<std::uint8_t>(i + 1);
  }
  std::vector<std::uint64_t> packed;
  packed.reserve(domain.size());
  for (std::uint64_t p : domain.packed())
    packed.push_back(detail::restrict_packed(p, n, mask, relabel));
  return Domain::from_packed(k, std::move(packed));
}

}  // namespace cdforge

#endif  // CDFORGE_DOMAIN_HPP
