#ifndef CDFORGE_ANALYSIS_HPP
#define CDFORGE_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdforge/detail/subsets.hpp"
#include "cdforge/domain.hpp"
#include "cdforge/order.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

/// A domain failed a structural check (as opposed to malformed input or a
/// broken file): disconnected median graph, mismatched record listing, ...
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orders as vertices, an edge wherever two orders differ by one adjacent
/// transposition (Kendall distance exactly 1).
class MedianGraph {
 public:
  explicit MedianGraph(const Domain& domain) : n_(domain.alternatives()) {
    const auto& packed = domain.packed();
    adj_.resize(packed.size());
    for (std::size_t i = 0; i < packed.size(); ++i) {
      const LinearOrder order = domain.at(i);
      for (int p = 0; p + 1 < n_; ++p) {
        const Alternative a = order.at(p), b = order.at(p + 1);
        if (a > b) continue;  // count each edge once, from its sorted side
        const LinearOrder swapped = swap_adjacent(order, p);
        const auto it = std::lower_bound(packed.begin(), packed.end(), swapped.packed());
        if (it != packed.end() && *it == swapped.packed()) {
          const auto j = static_cast<std::size_t>(it - packed.begin());
          adj_[i].push_back(static_cast<std::int32_t>(j));
          adj_[j].push_back(static_cast<std::int32_t>(i));
        }
      }
    }
  }

  std::size_t size() const { return adj_.size(); }
  const std::vector<std::int32_t>& neighbours(std::size_t v) const { return adj_[v]; }

  /// Distances from `source` (-1 where unreachable).
  std::vector<int> bfs(std::size_t source) const {
    std::vector<int> dist(adj_.size(), -1);
    std::queue<std::int32_t> queue;
    dist[source] = 0;
    queue.push(static_cast<std::int32_t>(source));
    while (!queue.empty()) {
      const std::int32_t v = queue.front();
      queue.pop();
      for (std::int32_t u : adj_[static_cast<std::size_t>(v)])
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push(u);
        }
    }
    return dist;
  }

 private:
  static LinearOrder swap_adjacent(const LinearOrder& order, int p) {
    auto seq = order.sequence();
    std::swap(seq[static_cast<std::size_t>(p)], seq[static_cast<std::size_t>(p) + 1]);
    return LinearOrder::from_sequence(seq);
  }

  int n_;
  std::vector<std::vector<std::int32_t>> adj_;
};

struct MedianGraphStats {
  int width = 0;       // graph diameter
  int radius = 0;      // minimum eccentricity
  std::size_t centre_count = 0;
};

/// Width, radius and centre count of the domain's median graph via all-pairs
/// BFS. Requires a connected graph; the error names a concrete unreachable
/// pair rather than assuming connectivity.
inline MedianGraphStats graph_stats(const Domain& domain) {
  if (domain.empty()) throw std::invalid_argument("graph_stats: empty domain");
  const MedianGraph graph(domain);

  const std::vector<int> from0 = graph.bfs(0);
  for (std::size_t v = 0; v < graph.size(); ++v)
    if (from0[v] < 0)
      throw verification_error("median graph is disconnected: no path between " +
                               domain.at(0).str() + " and " + domain.at(v).str());

  MedianGraphStats stats;
  stats.radius = std::numeric_limits<int>::max();
  std::vector<int> ecc(graph.size(), 0);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const std::vector<int> dist = graph.bfs(v);
    ecc[v] = *std::max_element(dist.begin(), dist.end());
    stats.width = std::max(stats.width, ecc[v]);
    stats.radius = std::min(stats.radius, ecc[v]);
  }
  for (std::size_t v = 0; v < graph.size(); ++v)
    stats.centre_count += ecc[v] == stats.radius;
  return stats;
}

/// Number of distinct relabelings pi_P(D) over P in D, where pi_P renames
/// alternatives so that P becomes the identity order.
inline std::size_t isomorphic_count(const Domain& domain) {
  if (domain.empty()) throw std::invalid_argument("isomorphic_count: empty domain");
  const int n = domain.alternatives();
  std::set<std::vector<std::uint64_t>> images;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const LinearOrder p = domain.at(i);
    std::uint8_t relabel[kMaxAlternatives + 1] = {};
    for (int pos = 0; pos < n; ++pos)
      relabel[p.at(pos)] = static_cast<std::uint8_t>(pos + 1);
    std::vector<std::uint64_t> image;
    image.reserve(domain.size());
    for (std::uint64_t word : domain.packed()) {
      std::uint64_t mapped = 0;
      for (int pos = 0; pos < n; ++pos) {
        const auto a = (word >> (4 * (15 - pos))) & 0xF;
        mapped |= std::uint64_t(relabel[a]) << (4 * (15 - pos));
      }
      image.push_back(mapped);
    }
    std::sort(image.begin(), image.end());
    images.insert(std::move(image));
  }
  return images.size();
}

/// Full stats row as published for the record domains: size, width, radius,
/// centre points, isomorphic-domain count.
struct DomainStats {
  std::size_t size = 0;
  int width = 0;
  int radius = 0;
  std::size_t centre_count = 0;
  std::size_t isomorphic_count = 0;
};

inline DomainStats domain_stats(const Domain& domain) {
  const MedianGraphStats g = graph_stats(domain);
  return {domain.size(), g.width, g.radius, g.centre_count, isomorphic_count(domain)};
}

/// Sizes of all C(n,k) subset restrictions, aggregated as size -> count.
inline std::map<std::size_t, std::size_t> subset_size_distribution(const Domain& domain,
                                                                   int k) {
  const int n = domain.alternatives();
  if (k < 3 || k >= n)
    throw std::invalid_argument("subset_size_distribution: k must be in 3..n-1");
  std::map<std::size_t, std::size_t> counts;
  detail::for_each_subset(n, k, [&](std::span<const int> subset) {
    std::vector<Alternative> s(subset.begin(), subset.end());
    ++counts[restrict_domain(domain, s).size()];
  });
  return counts;
}

/// Comparison of a rule system's domain against a published listing.
struct RecordReport {
  std::size_t built_size = 0;
  std::size_t listed_size = 0;
  bool size_match = false;
  bool set_match = false;
  bool unitary = false;                  // listing contains the identity order
  std::vector<LinearOrder> missing;      // listed but not built (first few)
  std::vector<LinearOrder> extra;        // built but not listed (first few)
  static constexpr std::size_t kMaxMismatches = 10;

  bool ok() const { return size_match && set_match && unitary; }
};

inline RecordReport verify_record(const Trs& trs, const Domain& listed) {
  const Domain built = build_domain(trs);
  RecordReport report;
  report.built_size = built.size();
  report.listed_size = listed.size();
  report.size_match = built.size() == listed.size();
  report.set_match = built == listed;
  report.unitary = listed.contains(LinearOrder::identity(listed.alternatives()));
  if (!report.set_match) {
    for (std::size_t i = 0; i < listed.size(); ++i)
      if (!built.contains(listed.at(i))) {
        report.missing.push_back(listed.at(i));
        if (report.missing.size() >= RecordReport::kMaxMismatches) break;
      }
    for (std::size_t i = 0; i < built.size(); ++i)
      if (!listed.contains(built.at(i))) {
        report.extra.push_back(built.at(i));
        if (report.extra.size() >= RecordReport::kMaxMismatches) break;
      }
  }
  return report;
}

}  // namespace cdforge

#endif  // CDFORGE_ANALYSIS_HPP
