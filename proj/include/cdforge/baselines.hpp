#ifndef CDFORGE_BASELINES_HPP
#define CDFORGE_BASELINES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdforge/domain.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

struct AnnealConfig {
  double initial_temperature = 5.0;
  double cooling_rate = 0.995;
  int steps_per_temperature = 200;
  int restarts = 20;  // runs beyond the first, as for hill_climb
  std::uint64_t seed = 0;
  int rule_alphabet = 4;          // 4 peak-pit rules, or 6 adding 1N2/3N2
  double min_temperature = 0.05;  // schedule end
};

struct LocalSearchResult {
  Trs trs;
  std::size_t size = 0;
  std::uint64_t evaluations = 0;
};

namespace detail {

// Exact-size evaluator for fully assigned systems. Keeps the incremental
// builder's per-alternative stage domains; a single-slot rule change only
// invalidates stages from the triple's largest member upward, so neighbour
// evaluations skip the untouched lower stages.
class SizeEvaluator {
 public:
  explicit SizeEvaluator(int n)
      : n_(n), triples_(triple_order(n)), rules_(triples_.size(), rules::r1N3) {
    for (int m = 0; m <= n; ++m) groups_.emplace_back();
    for (std::size_t s = 0; s < triples_.size(); ++s)
      groups_[static_cast<std::size_t>(triples_[s].z)].push_back(s);
    stages_.resize(static_cast<std::size_t>(n) + 1);
  }

  void reset(std::span<const NeverRule> rules) {
    std::copy(rules.begin(), rules.end(), rules_.begin());
    rebuild_from(3, stages_);
  }

  std::size_t current_size() const { return stages_[static_cast<std::size_t>(n_)].size(); }
  NeverRule rule_at(std::size_t slot) const { return rules_[slot]; }

  /// Domain size with `slot` changed to `rule`, without committing.
  std::size_t size_with(std::size_t slot, NeverRule rule) {
    const NeverRule saved = rules_[slot];
    rules_[slot] = rule;
    const int z = triples_[slot].z;
    scratch_.resize(stages_.size());
    const std::vector<std::uint64_t>* prev = &stages_[static_cast<std::size_t>(z) - 1];
    for (int m = z; m <= n_; ++m) {
      std::vector<std::pair<Triple, NeverRule>> top;
      top.reserve(groups_[static_cast<std::size_t>(m)].size());
      for (std::size_t s : groups_[static_cast<std::size_t>(m)])
        top.emplace_back(triples_[s], rules_[s]);
      scratch_[static_cast<std::size_t>(m)] = extend_orders(*prev, m, top);
      prev = &scratch_[static_cast<std::size_t>(m)];
    }
    rules_[slot] = saved;
    return prev->size();
  }

  void commit(std::size_t slot, NeverRule rule) {
    rules_[slot] = rule;
    rebuild_from(triples_[slot].z, stages_);
  }

  Trs to_trs() const {
    Trs trs(n_);
    for (std::size_t s = 0; s < rules_.size(); ++s) trs.assign(s, rules_[s]);
    return trs;
  }

 private:
  void rebuild_from(int z, std::vector<std::vector<std::uint64_t>>& stages) const {
    if (z <= 3)
      stages[2] = {LinearOrder::parse("12").packed(), LinearOrder::parse("21").packed()};
    for (int m = std::max(z, 3); m <= n_; ++m) {
      std::vector<std::pair<Triple, NeverRule>> top;
      top.reserve(groups_[static_cast<std::size_t>(m)].size());
      for (std::size_t s : groups_[static_cast<std::size_t>(m)])
        top.emplace_back(triples_[s], rules_[s]);
      stages[static_cast<std::size_t>(m)] =
          extend_orders(stages[static_cast<std::size_t>(m) - 1], m, top);
    }
  }

  int n_;
  const std::vector<Triple>& triples_;
  std::vector<NeverRule> rules_;
  std::vector<std::vector<std::size_t>> groups_;            // slots by largest member
  std::vector<std::vector<std::uint64_t>> stages_;          // committed state
  std::vector<std::vector<std::uint64_t>> scratch_;
};

inline std::span<const NeverRule> baseline_alphabet(int rule_alphabet) {
  static constexpr auto six = unitary_rules();
  if (rule_alphabet != 4 && rule_alphabet != 6)
    throw std::invalid_argument("rule alphabet must be 4 or 6");
  return {six.data(), static_cast<std::size_t>(rule_alphabet)};
}

inline void check_baseline_n(int n) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("local-search baselines are guarded to n in 3..8");
}

inline std::vector<NeverRule> random_rules(std::size_t slots,
                                           std::span<const NeverRule> alphabet,
                                           std::mt19937_64& rng) {
  std::vector<NeverRule> rules;
  rules.reserve(slots);
  for (std::size_t s = 0; s < slots; ++s)
    rules.push_back(alphabet[rng() % alphabet.size()]);
  return rules;
}

inline void recheck(LocalSearchResult& result) {
  if (build_domain(result.trs).size() != result.size)
    throw std::logic_error("baseline result failed the size re-check");
}

}  // namespace detail

/// Steepest-ascent hill climbing over single-slot rule changes, restarted
/// from `restarts` additional random assignments (restarts = 0 is a single
/// descent). Deterministic per seed.
inline LocalSearchResult hill_climb(int n, int restarts, std::uint64_t seed,
                                    int rule_alphabet = 4) {
  detail::check_baseline_n(n);
  if (restarts < 0) throw std::invalid_argument("restarts must be non-negative");
  const auto alphabet = detail::baseline_alphabet(rule_alphabet);
  std::mt19937_64 rng(seed);
  detail::SizeEvaluator eval(n);
  const std::size_t slots = triple_count(n);

  LocalSearchResult best;
  for (int run = 0; run <= restarts; ++run) {
    eval.reset(detail::random_rules(slots, alphabet, rng));
    std::size_t cur = eval.current_size();
    for (;;) {
      std::size_t move_slot = slots;
      NeverRule move_rule = alphabet[0];
      std::size_t move_size = cur;
      for (std::size_t s = 0; s < slots; ++s)
        for (NeverRule r : alphabet) {
          if (r == eval.rule_at(s)) continue;
          const std::size_t size = eval.size_with(s, r);
          ++best.evaluations;
          if (size > move_size) {  // strict improvement, first best wins
            move_size = size;
            move_slot = s;
            move_rule = r;
          }
        }
      if (move_slot == slots) break;  // local optimum
      eval.commit(move_slot, move_rule);
      cur = move_size;
    }
    if (cur > best.size) {
      best.size = cur;
      best.trs = eval.to_trs();
    }
  }
  detail::recheck(best);
  return best;
}

/// Simulated annealing: Metropolis acceptance on the size delta of a random
/// single-slot change, geometric cooling from initial_temperature down to
/// min_temperature, independent restarts. Deterministic per seed.
inline LocalSearchResult simulated_annealing(int n, const AnnealConfig& cfg) {
  detail::check_baseline_n(n);
  if (cfg.initial_temperature <= 0 || cfg.min_temperature <= 0 ||
      cfg.min_temperature > cfg.initial_temperature)
    throw std::invalid_argument("temperatures must satisfy 0 < min <= initial");
  if (cfg.cooling_rate <= 0 || cfg.cooling_rate >= 1)
    throw std::invalid_argument("cooling rate must lie in (0,1)");
  if (cfg.steps_per_temperature < 1)
    throw std::invalid_argument("steps per temperature must be at least 1");
  if (cfg.restarts < 0) throw std::invalid_argument("restarts must be non-negative");
  const auto alphabet = detail::baseline_alphabet(cfg.rule_alphabet);
  std::mt19937_64 rng(cfg.seed);
  auto uniform01 = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  detail::SizeEvaluator eval(n);
  const std::size_t slots = triple_count(n);

  LocalSearchResult best;
  for (int run = 0; run <= cfg.restarts; ++run) {
    eval.reset(detail::random_rules(slots, alphabet, rng));
    std::size_t cur = eval.current_size();
    if (cur > best.size) {
      best.size = cur;
      best.trs = eval.to_trs();
    }
    for (double t = cfg.initial_temperature; t > cfg.min_temperature;
         t *= cfg.cooling_rate) {
      for (int step = 0; step < cfg.steps_per_temperature; ++step) {
        const std::size_t slot = rng() % slots;
        NeverRule rule = alphabet[rng() % alphabet.size()];
        while (rule == eval.rule_at(slot)) rule = alphabet[rng() % alphabet.size()];
        const std::size_t proposed = eval.size_with(slot, rule);
        ++best.evaluations;
        const double delta =
            static_cast<double>(proposed) - static_cast<double>(cur);
        if (delta >= 0 || uniform01() < std::exp(delta / t)) {
          eval.commit(slot, rule);
          cur = proposed;
          if (cur > best.size) {
            best.size = cur;
            best.trs = eval.to_trs();
          }
        }
      }
    }
  }
  detail::recheck(best);
  return best;
}

}  // namespace cdforge

#endif  // CDFORGE_BASELINES_HPP
