#ifndef CDFORGE_SEARCH_HPP
#define CDFORGE_SEARCH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cdforge/detail/checksum.hpp"
#include "cdforge/detail/subsets.hpp"
#include "cdforge/domain.hpp"
#include "cdforge/lookup_db.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

/// Weight per subset-domain size 1..20 for the heuristic score
/// sum_i w_i * m_i, where m_i counts five-alternative subsets whose
/// database value is i.
struct WeightVector {
  std::array<std::int64_t, 20> w{};

  std::int64_t of(int size) const { return w[static_cast<std::size_t>(size) - 1]; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// The weights used for the record runs: sizes 17..20 weighted 1..4,
/// everything below ignored.
inline WeightVector default_weights() {
  WeightVector v;
  v.w[16] = 1;
  v.w[17] = 2;
  v.w[18] = 3;
  v.w[19] = 4;
  return v;
}

struct BeamConfig {
  int n = 0;
  int beam_width = 0;  // nodes retained per step (stage-2 width when staged)
  WeightVector weights = default_weights();
  std::optional<int> stage_split_triple;  // staged: slots assigned in stage 1
  std::optional<int> chunk_count;         // staged: survivor list split count
  std::optional<int> chunk_id;            // staged: run only this chunk (array jobs)
  std::optional<int> stage1_width;        // staged: defaults to beam_width
  std::uint64_t seed = 0;                 // drives the stage-1 survivor shuffle
  int threads = 1;
};

struct SearchHit {
  Trs trs;
  std::size_t size = 0;
};

/// Fully assigned systems found by a search, deduplicated by domain content
/// (distinct rule systems can produce the same domain), ordered by size
/// descending then state key ascending.
struct SearchResult {
  std::vector<SearchHit> hits;
  std::map<std::size_t, std::size_t, std::greater<>> size_counts;  // distinct domains

  std::size_t best_size() const { return hits.empty() ? 0 : hits.front().size; }
};

/// Eq-style heuristic: restrict to every five-alternative subset, look each
/// restricted state up in the database, and sum the weights of the values
/// found. Defined for prefix-assigned systems on six or more alternatives.
inline std::int64_t heuristic_value(const Trs& trs, const LookupDb& db,
                                    const WeightVector& weights) {
  const int n = trs.alternatives();
  if (n < 6)
    throw std::invalid_argument("heuristic_value: needs at least 6 alternatives");
  if (!trs.is_prefix_assigned())
    throw std::invalid_argument("heuristic_value: assigned slots must form a prefix");
  std::int64_t total = 0;
  detail::for_each_subset(n, 5, [&](std::span<const int> subset) {
    std::vector<Alternative> s(subset.begin(), subset.end());
    total += weights.of(db.lookup(encode_state(restrict_trs(trs, s))));
  });
  return total;
}

namespace detail {

// Static per-n expansion tables. subset_slots[id] lists the global slot
// indices of the subset's ten triples in ascending order, which — because
// monotone relabelling preserves the (x, z, y) comparator — is exactly the
// restricted system's own slot order. affected[k] lists the subsets whose
// restriction gains a digit when slot k is assigned, together with the
// restricted prefix length afterwards; only those subsets can change value.
struct SubsetPlan {
  int n = 0;
  std::size_t slots = 0;
  std::size_t subset_count = 0;
  std::vector<std::array<std::int16_t, 10>> subset_slots;
  struct Affected {
    std::int32_t subset;
    std::int32_t len_after;
  };
  std::vector<std::vector<Affected>> affected;

  static SubsetPlan make(int n) {
    if (n < 5 || n > kMaxAlternatives)
      throw std::invalid_argument("beam search supports 5..15 alternatives");
    SubsetPlan plan;
    plan.n = n;
    plan.slots = triple_count(n);
    plan.affected.resize(plan.slots);
    const auto& triples = triple_order(n);
    for_each_subset(n, 5, [&](std::span<const int> subset) {
      unsigned mask = 0;
      for (int a : subset) mask |= 1u << a;
      std::array<std::int16_t, 10> sl{};
      int cnt = 0;
      for (std::size_t s = 0; s < plan.slots; ++s) {
        const Triple& t = triples[s];
        if ((mask & (1u << t.x)) && (mask & (1u << t.y)) && (mask & (1u << t.z)))
          sl[cnt++] = static_cast<std::int16_t>(s);
      }
      const auto id = static_cast<std::int32_t>(plan.subset_count++);
      plan.subset_slots.push_back(sl);
      for (int i = 0; i < cnt; ++i)
        plan.affected[sl[i]].push_back({id, i + 1});
    });
    return plan;
  }
};

// Beam generation in structure-of-arrays form: per node a digit row (0 =
// unassigned, 1..4 = rule), a cached database value per subset, and the
// score. Rows never shrink below their stride, so reuse across steps is a
// plain resize.
struct BeamBuffer {
  std::size_t digit_stride = 0;
  std::size_t value_stride = 0;
  std::size_t count = 0;
  std::vector<std::uint8_t> digits;
  std::vector<std::uint8_t> values;
  std::vector<std::int64_t> scores;

  void init(std::size_t ds, std::size_t vs) {
    digit_stride = ds;
    value_stride = vs;
    count = 0;
  }
  void resize_nodes(std::size_t c) {
    count = c;
    digits.resize(c * digit_stride);
    values.resize(c * value_stride);
    scores.resize(c);
  }
  std::uint8_t* digit_row(std::size_t i) { return digits.data() + i * digit_stride; }
  const std::uint8_t* digit_row(std::size_t i) const {
    return digits.data() + i * digit_stride;
  }
  std::uint8_t* value_row(std::size_t i) { return values.data() + i * value_stride; }
  const std::uint8_t* value_row(std::size_t i) const {
    return values.data() + i * value_stride;
  }
};

template <typename Fn>
void parallel_ranges(std::size_t total, int threads, Fn&& fn) {
  if (threads <= 1 || total < 2048) {
    fn(std::size_t{0}, total);
    return;
  }
  const std::size_t parts = std::min<std::size_t>(threads, total);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t lo = total * p / parts;
    const std::size_t hi = total * (p + 1) / parts;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

inline void expand_children(const SubsetPlan& plan, const LookupDb& db,
                            const WeightVector& weights, int k,
                            const BeamBuffer& parents, BeamBuffer& children,
                            int threads) {
  children.resize_nodes(parents.count * 4);
  const std::size_t ds = parents.digit_stride;
  const std::size_t vs = parents.value_stride;
  parallel_ranges(parents.count, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      const std::uint8_t* pd = parents.digit_row(p);
      const std::uint8_t* pv = parents.value_row(p);
      const std::int64_t base = parents.scores[p];
      for (std::uint8_t d = 1; d <= 4; ++d) {
        const std::size_t c = 4 * p + (d - 1);
        std::uint8_t* cd = children.digit_row(c);
        std::uint8_t* cv = children.value_row(c);
        std::memcpy(cd, pd, ds);
        cd[k] = d;
        std::memcpy(cv, pv, vs);
        std::int64_t score = base;
        for (const auto& a : plan.affected[k]) {
          const auto& sl = plan.subset_slots[static_cast<std::size_t>(a.subset)];
          std::uint32_t idx = 0;
          for (std::int32_t i = 0; i < a.len_after; ++i)
            idx = idx * 4 + static_cast<std::uint32_t>(cd[sl[i]] - 1);
          const std::uint8_t v =
              static_cast<std::uint8_t>(db.value_at(a.len_after, idx));
          score += weights.of(v) - weights.of(cv[a.subset]);
          cv[a.subset] = v;
        }
        children.scores[c] = score;
      }
    }
  });
}

// Keep the best `width` nodes under (score descending, digit string
// ascending); the tie-break makes retention — and hence the whole search —
// a deterministic function of the configuration.
inline void retain_top(const BeamBuffer& children, std::size_t width, BeamBuffer& out) {
  const std::size_t keep = std::min(width, children.count);
  std::vector<std::uint32_t> idx(children.count);
  std::iota(idx.begin(), idx.end(), 0u);
  const std::size_t ds = children.digit_stride;
  auto cmp = [&](std::uint32_t a, std::uint32_t b) {
    if (children.scores[a] != children.scores[b])
      return children.scores[a] > children.scores[b];
    return std::memcmp(children.digit_row(a), children.digit_row(b), ds) < 0;
  };
  if (keep < children.count)
    std::nth_element(idx.begin(), idx.begin() + keep, idx.end(), cmp);
  std::sort(idx.begin(), idx.begin() + keep, cmp);
  out.resize_nodes(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    std::memcpy(out.digit_row(i), children.digit_row(idx[i]), ds);
    std::memcpy(out.value_row(i), children.value_row(idx[i]), children.value_stride);
    out.scores[i] = children.scores[idx[i]];
  }
}

inline void run_beam_range(const SubsetPlan& plan, const LookupDb& db,
                           const WeightVector& weights, std::size_t width,
                           int threads, std::size_t from_slot, std::size_t to_slot,
                           BeamBuffer& beam, BeamBuffer& scratch) {
  for (std::size_t k = from_slot; k < to_slot; ++k) {
    expand_children(plan, db, weights, static_cast<int>(k), beam, scratch, threads);
    retain_top(scratch, width, beam);
  }
}

inline Trs trs_from_digits(std::span<const std::uint8_t> digits, int n) {
  Trs trs(n);
  for (std::size_t s = 0; s < digits.size(); ++s)
    if (digits[s]) trs.assign(s, peak_pit_rules()[digits[s] - 1]);
  return trs;
}

struct RawHit {
  Digest128 digest;
  std::size_t size = 0;
  std::vector<std::uint8_t> digits;
};

inline void size_and_digest(const BeamBuffer& beam, int n, int threads,
                            std::vector<RawHit>& out) {
  const std::size_t first = out.size();
  out.resize(first + beam.count);
  parallel_ranges(beam.count, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint8_t* row = beam.digit_row(i);
      const Domain d =
          build_domain(trs_from_digits({row, beam.digit_stride}, n));
      RawHit& hit = out[first + i];
      hit.digest = digest128(d.packed());
      hit.size = d.size();
      hit.digits.assign(row, row + beam.digit_stride);
    }
  });
}

inline SearchResult collect_hits(std::vector<RawHit> raw, int n) {
  std::sort(raw.begin(), raw.end(), [](const RawHit& a, const RawHit& b) {
    if (a.digest != b.digest) return a.digest < b.digest;
    return a.digits < b.digits;
  });
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [](const RawHit& a, const RawHit& b) {
                          return a.digest == b.digest;
                        }),
            raw.end());
  std::sort(raw.begin(), raw.end(), [](const RawHit& a, const RawHit& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.digits < b.digits;
  });
  SearchResult result;
  result.hits.reserve(raw.size());
  for (const RawHit& hit : raw) {
    result.hits.push_back({trs_from_digits(hit.digits, n), hit.size});
    ++result.size_counts[hit.size];
  }
  return result;
}

inline void validate_common(const BeamConfig& cfg, const LookupDb& db) {
  if (cfg.n < 5 || cfg.n > kMaxAlternatives)
    throw std::invalid_argument("beam search: n must be in 5..15");
  if (cfg.beam_width < 1) throw std::invalid_argument("beam width must be positive");
  if (cfg.threads < 1) throw std::invalid_argument("thread count must be positive");
  for (std::int64_t w : cfg.weights.w)
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
  if (db.empty()) throw std::invalid_argument("lookup database not loaded");
}

inline BeamBuffer root_beam(const SubsetPlan& plan, const LookupDb& db,
                            const WeightVector& weights) {
  BeamBuffer beam;
  beam.init(plan.slots, plan.subset_count);
  beam.resize_nodes(1);
  std::memset(beam.digit_row(0), 0, plan.slots);
  const std::uint8_t root_value = static_cast<std::uint8_t>(db.value_at(0, 0));
  std::memset(beam.value_row(0), root_value, plan.subset_count);
  beam.scores[0] =
      static_cast<std::int64_t>(plan.subset_count) * weights.of(root_value);
  return beam;
}

// Standardized engine + explicit bounded draw, so a (seed, chunk) pair
// reproduces bit-identically everywhere.
inline void deterministic_shuffle(std::vector<std::uint32_t>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace detail

/// Breadth-limited search over the rule-assignment tree: assign slots in
/// (x, z, y) order, expand every retained node by the four rules, score
/// children incrementally through the lookup database, keep the best
/// `beam_width`. Only the terminal generation is sized exactly.
inline SearchResult beam_search(const BeamConfig& cfg, const LookupDb& db) {
  detail::validate_common(cfg, db);
  const auto plan = detail::SubsetPlan::make(cfg.n);
  detail::BeamBuffer beam = detail::root_beam(plan, db, cfg.weights);
  detail::BeamBuffer scratch;
  scratch.init(plan.slots, plan.subset_count);
  detail::run_beam_range(plan, db, cfg.weights,
                         static_cast<std::size_t>(cfg.beam_width), cfg.threads, 0,
                         plan.slots, beam, scratch);
  std::vector<detail::RawHit> raw;
  detail::size_and_digest(beam, cfg.n, cfg.threads, raw);
  return detail::collect_hits(std::move(raw), cfg.n);
}

/// Two-stage variant: run the beam to `stage_split_triple` assigned slots,
/// shuffle the surviving nodes with the seed, split them into
/// `chunk_count` equal chunks, and finish each chunk as an independent beam
/// of width `beam_width` (stage 1 uses `stage1_width`, default the same).
/// With `chunk_id` set, only that chunk runs — the share-nothing array-job
/// mode; results of all chunks merge by plain concatenation.
inline SearchResult staged_search(const BeamConfig& cfg, const LookupDb& db) {
  detail::validate_common(cfg, db);
  if (!cfg.stage_split_triple || !cfg.chunk_count)
    throw std::invalid_argument("staged search needs stage_split_triple and chunk_count");
  const auto plan = detail::SubsetPlan::make(cfg.n);
  const auto split = static_cast<std::size_t>(*cfg.stage_split_triple);
  const int chunks = *cfg.chunk_count;
  if (split < 1 || split >= plan.slots)
    throw std::invalid_argument("stage split must name an interior slot");
  if (chunks < 1) throw std::invalid_argument("chunk count must be positive");
  if (cfg.chunk_id && (*cfg.chunk_id < 0 || *cfg.chunk_id >= chunks))
    throw std::invalid_argument("chunk id out of range");
  const std::size_t stage1_width = static_cast<std::size_t>(
      cfg.stage1_width.value_or(cfg.beam_width));
  if (stage1_width < 1) throw std::invalid_argument("stage-1 width must be positive");

  detail::BeamBuffer beam = detail::root_beam(plan, db, cfg.weights);
  detail::BeamBuffer scratch;
  scratch.init(plan.slots, plan.subset_count);
  detail::run_beam_range(plan, db, cfg.weights, stage1_width, cfg.threads, 0, split,
                         beam, scratch);

  std::vector<std::uint32_t> perm(beam.count);
  std::iota(perm.begin(), perm.end(), 0u);
  detail::deterministic_shuffle(perm, cfg.seed);

  const std::size_t q = beam.count / static_cast<std::size_t>(chunks);
  const std::size_t r = beam.count % static_cast<std::size_t>(chunks);
  std::vector<detail::RawHit> raw;
  for (int c = 0; c < chunks; ++c) {
    if (cfg.chunk_id && *cfg.chunk_id != c) continue;
    const std::size_t uc = static_cast<std::size_t>(c);
    const std::size_t begin = uc * q + std::min<std::size_t>(uc, r);
    const std::size_t len = q + (uc < r ? 1 : 0);
    if (len == 0) continue;
    detail::BeamBuffer sub;
    sub.init(plan.slots, plan.subset_count);
    sub.resize_nodes(len);
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint32_t src = perm[begin + i];
      std::memcpy(sub.digit_row(i), beam.digit_row(src), plan.slots);
      std::memcpy(sub.value_row(i), beam.value_row(src), plan.subset_count);
      sub.scores[i] = beam.scores[src];
    }
    detail::run_beam_range(plan, db, cfg.weights,
                           static_cast<std::size_t>(cfg.beam_width), cfg.threads,
                           split, plan.slots, sub, scratch);
    detail::size_and_digest(sub, cfg.n, cfg.threads, raw);
  }
  return detail::collect_hits(std::move(raw), cfg.n);
}

namespace detail {

// Per-rule surviving-order counts for one triple, in digit order.
inline std::array<std::size_t, 4> rule_survivals(std::span<const std::uint64_t> packed,
                                                 int n, const Triple& t) {
  std::array<std::size_t, 4> alive{};
  int pos[kMaxAlternatives + 1];
  for (std::uint64_t word : packed) {
    for (int p = 0; p < n; ++p) pos[(word >> (4 * (15 - p))) & 0xF] = p;
    const int px = pos[t.x], py = pos[t.y], pz = pos[t.z];
    const int place_x = 1 + (py < px) + (pz < px);
    const int place_y = 1 + (px < py) + (pz < py);
    const int place_z = 1 + (px < pz) + (py < pz);
    alive[0] += place_x != 3;  // 1N3
    alive[1] += place_z != 1;  // 3N1
    alive[2] += place_y != 1;  // 2N1
    alive[3] += place_y != 3;  // 2N3
  }
  return alive;
}

inline std::size_t next_dynamic_slot(const Trs& trs,
                                     std::span<const std::uint64_t> domain_packed) {
  const int n = trs.alternatives();
  const auto& triples = triple_order(n);
  std::size_t best_slot = trs.slot_count();
  std::size_t best_worst = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < trs.slot_count(); ++s) {
    if (trs.rule_at(s)) continue;
    const auto alive = rule_survivals(domain_packed, n, triples[s]);
    const std::size_t worst = *std::max_element(alive.begin(), alive.end());
    if (worst < best_worst) {
      best_worst = worst;
      best_slot = s;
    }
  }
  return best_slot;
}

}  // namespace detail

/// The slot whose assignment shrinks the partial domain the most even under
/// its most favourable rule (ties resolve to the lowest slot index).
/// Evaluating every unassigned slot costs a pass over the partial domain per
/// slot, which is why it is guarded to n <= 7.
inline std::size_t dynamic_next_triple(const Trs& trs) {
  const int n = trs.alternatives();
  if (n > 7)
    throw std::invalid_argument("dynamic_next_triple: limited to n <= 7");
  if (trs.fully_assigned())
    throw std::invalid_argument("dynamic_next_triple: no unassigned triple");
  const Domain d = build_domain(trs);
  return detail::next_dynamic_slot(trs, d.packed());
}

/// Beam search with per-node dynamic slot selection and exact partial-domain
/// sizes as scores. No database involved; costs grow quickly, hence the
/// n <= 7 guard shared with dynamic_next_triple.
inline SearchResult dynamic_beam_search(const BeamConfig& cfg) {
  if (cfg.n < 3 || cfg.n > 7)
    throw std::invalid_argument("dynamic beam search: n must be in 3..7");
  if (cfg.beam_width < 1) throw std::invalid_argument("beam width must be positive");

  struct Node {
    std::vector<std::uint8_t> digits;
    std::vector<std::uint64_t> domain;
  };
  const std::size_t slots = triple_count(cfg.n);
  const auto& triples = triple_order(cfg.n);
  std::vector<Node> beam(1);
  beam[0].digits.assign(slots, 0);
  beam[0].domain = build_domain(Trs(cfg.n)).packed();

  for (std::size_t step = 0; step < slots; ++step) {
    std::vector<Node> children;
    children.reserve(beam.size() * 4);
    for (const Node& node : beam) {
      const Trs trs = detail::trs_from_digits(node.digits, cfg.n);
      const std::size_t slot = detail::next_dynamic_slot(trs, node.domain);
      for (std::uint8_t d = 1; d <= 4; ++d) {
        Node child;
        child.digits = node.digits;
        child.digits[slot] = d;
        const NeverRule rule = peak_pit_rules()[d - 1];
        int pos[kMaxAlternatives + 1];
        for (std::uint64_t word : node.domain) {
          for (int p = 0; p < cfg.n; ++p) pos[(word >> (4 * (15 - p))) & 0xF] = p;
          if (detail::rule_allows_pos(pos, triples[slot], rule))
            child.domain.push_back(word);
        }
        children.push_back(std::move(child));
      }
    }
    std::sort(children.begin(), children.end(), [](const Node& a, const Node& b) {
      if (a.domain.size() != b.domain.size()) return a.domain.size() > b.domain.size();
      return a.digits < b.digits;
    });
    if (children.size() > static_cast<std::size_t>(cfg.beam_width))
      children.resize(static_cast<std::size_t>(cfg.beam_width));
    beam = std::move(children);
  }

  std::vector<detail::RawHit> raw;
  raw.reserve(beam.size());
  for (const Node& node : beam)
    raw.push_back({detail::digest128(node.domain), node.domain.size(), node.digits});
  return detail::collect_hits(std::move(raw), cfg.n);
}

}  // namespace cdforge

#endif  // CDFORGE_SEARCH_HPP
