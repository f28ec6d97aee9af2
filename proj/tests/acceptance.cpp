// Acceptance suite: one pass/fail line per criterion, nonzero exit when a
// blocking criterion fails. `--slow` adds the large alternating-scheme rows.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cdforge/analysis.hpp"
#include "cdforge/baselines.hpp"
#include "cdforge/io.hpp"
#include "cdforge/lookup_db.hpp"
#include "cdforge/search.hpp"

using namespace cdforge;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

const fs::path kDataDir{CDFORGE_DATA_DIR};
bool g_slow = false;

struct Check {
  std::string name;
  bool pass;
  std::string note;
};

struct CriterionResult {
  int id;
  std::string title;
  double limit_secs;
  bool blocking = true;
  std::vector<Check> checks{};
  double elapsed = 0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }
};

void expect(CriterionResult& cr, bool cond, std::string name, std::string note = "") {
  cr.checks.push_back({std::move(name), cond, std::move(note)});
}

template <typename T>
std::string show(const T& v) {
  return std::to_string(v);
}

std::string show_dist(const std::map<std::size_t, std::size_t>& d) {
  std::string s = "{";
  for (const auto& [size, count] : d)
    s += std::to_string(size) + ":" + std::to_string(count) + " ";
  if (s.size() > 1) s.pop_back();
  return s + "}";
}

Domain domain_of(std::initializer_list<const char*> strs) {
  std::vector<LinearOrder> orders;
  for (const char* s : strs) orders.push_back(LinearOrder::parse(s));
  return Domain::from_orders(orders.begin()->size(), orders);
}

const LookupDb& shared_db() {
  static const LookupDb db = build_db();
  return db;
}

Trs random_full_trs(int n, std::mt19937_64& rng) {
  Trs trs(n);
  for (std::size_t s = 0; s < trs.slot_count(); ++s)
    trs.assign(s, peak_pit_rules()[rng() % 4]);
  return trs;
}

// ---------------------------------------------------------------------------

CriterionResult criterion_1_rule_semantics() {
  CriterionResult cr{1, "rule semantics and the six three-alternative domains", 1.0};
  struct Row {
    NeverRule rule;
    Domain expected;
  };
  const std::vector<Row> rows{
      {rules::r1N3, domain_of({"123", "132", "213", "312"})},
      {rules::r2N3, domain_of({"123", "213", "231", "321"})},
      {rules::r3N1, domain_of({"123", "132", "213", "231"})},
      {rules::r2N1, domain_of({"123", "132", "312", "321"})},
      {rules::r1N2, domain_of({"123", "132", "231", "321"})},
      {rules::r3N2, domain_of({"123", "213", "312", "321"})},
  };
  std::vector<Domain> built;
  for (const Row& row : rows) {
    Trs trs(3);
    trs.assign(Triple(1, 2, 3), row.rule);
    built.push_back(build_domain(trs));
    expect(cr, built.back() == row.expected, "domain of " + row.rule.str());
  }
  // the six domains pair up isomorphically in listed order
  for (std::size_t p = 0; p + 1 < built.size(); p += 2) {
    bool related = false;
    const Domain& a = built[p];
    for (std::size_t i = 0; i < a.size() && !related; ++i) {
      std::uint8_t relabel[kMaxAlternatives + 1] = {};
      for (int pos = 0; pos < 3; ++pos)
        relabel[a.at(i).at(pos)] = static_cast<std::uint8_t>(pos + 1);
      std::vector<LinearOrder> mapped;
      for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<Alternative> seq;
        for (int pos = 0; pos < 3; ++pos) seq.push_back(relabel[a.at(j).at(pos)]);
        mapped.push_back(LinearOrder::from_sequence(seq));
      }
      related = Domain::from_orders(3, mapped) == built[p + 1];
    }
    expect(cr, related,
           rows[p].rule.str() + " and " + rows[p + 1].rule.str() + " are isomorphic");
  }
  return cr;
}

CriterionResult criterion_2_alternating_sizes() {
  CriterionResult cr{2, "alternating-scheme domain sizes", g_slow ? 600.0 : 60.0};
  const std::map<int, std::size_t> expected{{4, 9},    {5, 20},    {6, 45},
                                            {7, 100},  {8, 222},   {9, 488},
                                            {10, 1069}, {11, 2324}};
  for (const auto& [n, size] : expected) {
    const std::size_t got = build_domain(alternating_scheme_trs(n)).size();
    expect(cr, got == size, "size n=" + show(n),
           "expected " + show(size) + ", got " + show(got));
  }
  if (g_slow) {
    for (const auto& [n, size] :
         std::map<int, std::size_t>{{12, 5034}, {13, 10840}}) {
      const std::size_t got = build_domain(alternating_scheme_trs(n)).size();
      expect(cr, got == size, "size n=" + show(n) + " (slow)",
             "expected " + show(size) + ", got " + show(got));
    }
  }
  return cr;
}

CriterionResult criterion_3_record_verification() {
  CriterionResult cr{3, "record rule systems rebuild their published listings", 120.0};
  struct Row {
    const char* trs;
    const char* domain;
    std::size_t size;
  };
  for (const Row& row : {Row{"trs_n10_1082.txt", "domain_n10_1082.txt", 1082},
                         Row{"trs_n11_2349.txt", "domain_n11_2349.txt", 2349}}) {
    const Trs trs = parse_trs_file(kDataDir / row.trs);
    const Domain listed = parse_domain_file(kDataDir / row.domain);
    const RecordReport r = verify_record(trs, listed);
    expect(cr, r.built_size == row.size, std::string(row.trs) + " builds " + show(row.size),
           "built " + show(r.built_size));
    expect(cr, r.set_match, std::string(row.trs) + " equals the listing as a set");
    expect(cr, r.unitary, std::string(row.domain) + " contains the identity order");
  }
  return cr;
}

CriterionResult criterion_4_subset_distributions() {
  CriterionResult cr{4, "subset-size distributions of the record domains", 300.0};
  using Dist = std::map<std::size_t, std::size_t>;
  const Domain d10 = parse_domain_file(kDataDir / "domain_n10_1082.txt");
  const std::map<int, Dist> expected10{
      {4, {{8, 90}, {9, 120}}},
      {5, {{16, 6}, {17, 30}, {18, 6}, {19, 162}, {20, 48}}},
      {6, {{36, 6}, {39, 6}, {40, 2}, {41, 44}, {42, 86}, {43, 40}, {44, 6}, {45, 20}}},
      {7,
       {{87, 6}, {89, 2}, {91, 4}, {92, 16}, {93, 22}, {94, 18}, {95, 8}, {96, 16},
        {97, 6}, {98, 16}, {100, 6}}},
      {8,
       {{200, 2}, {204, 4}, {205, 4}, {209, 4}, {211, 3}, {212, 2}, {214, 7},
        {216, 10}, {218, 4}, {219, 4}, {222, 1}}},
      {9, {{473, 4}, {481, 2}, {485, 4}}},
  };
  for (const auto& [k, dist] : expected10) {
    const Dist got = subset_size_distribution(d10, k);
    expect(cr, got == dist, "1082-domain distribution k=" + show(k),
           got == dist ? "" : "got " + show_dist(got));
  }
  const Domain d11 = parse_domain_file(kDataDir / "domain_n11_2349.txt");
  const std::map<int, Dist> expected11{
      {4, {{8, 143}, {9, 187}}},
      {5, {{16, 28}, {17, 46}, {18, 5}, {19, 279}, {20, 104}}},
      {6,
       {{32, 3}, {35, 10}, {36, 9}, {39, 35}, {40, 2}, {41, 73}, {42, 164}, {43, 79},
        {44, 35}, {45, 52}}},
      {10,
       {{1021, 1}, {1026, 1}, {1035, 1}, {1045, 2}, {1053, 1}, {1068, 1}, {1074, 2},
        {1078, 2}}},
  };
  for (const auto& [k, dist] : expected11) {
    const Dist got = subset_size_distribution(d11, k);
    expect(cr, got == dist, "2349-domain distribution k=" + show(k),
           got == dist ? "" : "got " + show_dist(got));
  }
  // power-of-two subset domains occur: 8 at k=4 and 16 at k=5 (1082 domain),
  // 32 at k=6 (2349 domain)
  expect(cr, subset_size_distribution(d10, 4).count(8) == 1, "1082-domain has size-8 4-subsets");
  expect(cr, subset_size_distribution(d10, 5).count(16) == 1, "1082-domain has size-16 5-subsets");
  expect(cr, subset_size_distribution(d11, 6).count(32) == 1, "2349-domain has size-32 6-subsets");
  return cr;
}

CriterionResult criterion_5_median_graph_stats() {
  CriterionResult cr{5, "median-graph stats of the scheme family and the 1082 record",
                     600.0};
  struct Row {
    int n;
    std::size_t size;
    int width;
    int radius;
    std::size_t centres;
    std::size_t iso;
  };
  for (const Row& row : {Row{4, 9, 6, 3, 1, 9}, Row{5, 20, 10, 5, 2, 10},
                         Row{6, 45, 15, 8, 6, 45}, Row{7, 100, 21, 11, 10, 50},
                         Row{8, 222, 28, 14, 9, 222}, Row{9, 488, 36, 18, 16, 244}}) {
    const Domain d = build_domain(alternating_scheme_trs(row.n));
    const DomainStats s = domain_stats(d);
    const bool ok = s.size == row.size && s.width == row.width &&
                    s.radius == row.radius && s.centre_count == row.centres &&
                    s.isomorphic_count == row.iso;
    expect(cr, ok, "scheme stats n=" + show(row.n),
           ok ? "" : "got " + show(s.size) + "/" + show(s.width) + "/" + show(s.radius) +
                         "/" + show(s.centre_count) + "/" + show(s.isomorphic_count));
  }
  const Domain d10 = parse_domain_file(kDataDir / "domain_n10_1082.txt");
  const DomainStats s = domain_stats(d10);
  const bool ok = s.width == 41 && s.radius == 21 && s.centre_count == 57 &&
                  s.isomorphic_count == 1082;
  expect(cr, ok, "1082-domain stats width/radius/centres/isomorphic = 41/21/57/1082",
         ok ? "" : "got " + show(s.width) + "/" + show(s.radius) + "/" +
                       show(s.centre_count) + "/" + show(s.isomorphic_count));
  return cr;
}

CriterionResult criterion_6_lookup_db() {
  CriterionResult cr{6, "lookup database build and dynamic-programming values", 600.0};
  const auto t0 = clock_type::now();
  const LookupDb db = build_db();
  const double build_secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  expect(cr, build_secs < 600.0, "database builds within the budget",
         show(build_secs) + "s");
  expect(cr, db.lookup("") == 20, "empty prefix value is 20",
         "got " + show(db.lookup("")));
  expect(cr, db.lookup("4444444444") == 16, "all-2N3 leaf value is 16",
         "got " + show(db.lookup("4444444444")));

  std::mt19937_64 rng(1000003);
  std::size_t mismatches = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t k = 5 + rng() % 6;
    std::string prefix;
    for (std::size_t i = 0; i < k; ++i)
      prefix.push_back(static_cast<char>('1' + rng() % 4));
    // brute-force max over completions, each built independently
    std::size_t best = 0;
    std::string digits = prefix;
    digits.resize(LookupDb::kSlots, '1');
    auto rec = [&](auto&& self, std::size_t slot) -> void {
      if (slot == LookupDb::kSlots) {
        best = std::max(best, build_domain(decode_state(StateKey{digits}, 5)).size());
        return;
      }
      for (char d = '1'; d <= '4'; ++d) {
        digits[slot] = d;
        self(self, slot + 1);
      }
    };
    rec(rec, k);
    mismatches += db.lookup(prefix) != best;
  }
  expect(cr, mismatches == 0,
         "values equal brute-force completion maxima on 1000 prefixes (k >= 5)",
         show(mismatches) + " mismatches");
  return cr;
}

CriterionResult criterion_7_heuristic_consistency() {
  CriterionResult cr{7, "heuristic consistency against restriction oracles", 600.0};
  const LookupDb& db = shared_db();

  // Strict form: every five-subset lookup equals the size of the built
  // domain's restriction. This equality is not a theorem — the restriction
  // of the built domain can be a proper subset of the restricted rule
  // system's domain — so random systems violate it; kept as specified and
  // reported honestly (see the corrected form below).
  std::mt19937_64 rng(77);
  std::size_t strict_ok = 0, strict_total = 0;
  std::size_t corrected_bad = 0;
  for (int n : {6, 7}) {
    for (int it = 0; it < 100; ++it) {
      const Trs trs = random_full_trs(n, rng);
      const Domain built = build_domain(trs);
      bool all_equal = true;
      detail::for_each_subset(n, 5, [&](std::span<const int> subset) {
        const std::vector<Alternative> s(subset.begin(), subset.end());
        const Trs rtrs = restrict_trs(trs, s);
        const std::uint16_t looked = db.lookup(encode_state(rtrs));
        if (looked != restrict_domain(built, s).size()) all_equal = false;
        // corrected: the lookup is the restricted system's own domain size
        if (looked != build_domain(rtrs).size()) ++corrected_bad;
      });
      ++strict_total;
      strict_ok += all_equal;
    }
  }
  expect(cr, strict_ok == strict_total,
         "lookups equal restricted-domain sizes on 200 random systems (strict equality)",
         show(strict_ok) + "/" + show(strict_total) +
             " systems had all subsets equal; the restriction of a built domain is "
             "contained in, but not always equal to, the restricted system's domain");
  expect(cr, corrected_bad == 0,
         "lookups equal the restricted systems' domain sizes (independent route)",
         show(corrected_bad) + " mismatches");

  // value arithmetic for the shipped 1082 system: counts of subset values
  // 17..20 weighted 1..4 give 30 + 2*6 + 3*162 + 4*48 = 720
  const Trs trs10 = parse_trs_file(kDataDir / "trs_n10_1082.txt");
  const std::int64_t value = heuristic_value(trs10, db, default_weights());
  expect(cr, value == 720, "weighted value of the 1082 system equals 720",
         "got " + show(value));
  const Domain d10 = parse_domain_file(kDataDir / "domain_n10_1082.txt");
  const auto k5 = subset_size_distribution(d10, 5);
  const std::int64_t from_counts = 1 * static_cast<std::int64_t>(k5.at(17)) +
                                   2 * static_cast<std::int64_t>(k5.at(18)) +
                                   3 * static_cast<std::int64_t>(k5.at(19)) +
                                   4 * static_cast<std::int64_t>(k5.at(20));
  expect(cr, from_counts == 720, "same value derived from the domain's subset counts",
         "got " + show(from_counts));
  return cr;
}

CriterionResult criterion_8_search_rediscovery() {
  CriterionResult cr{8, "beam search rediscovers the known maxima in time", 60.0};
  {
    BeamConfig cfg;
    cfg.n = 6;
    cfg.beam_width = 1000;
    const auto t0 = clock_type::now();
    const SearchResult r = beam_search(cfg, shared_db());
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    expect(cr, r.best_size() == 45, "n=6 beam width 1000 finds 45",
           "got " + show(r.best_size()));
    expect(cr, secs <= 6.05, "n=6 search within 6.05s", show(secs) + "s");
  }
  {
    BeamConfig cfg;
    cfg.n = 7;
    cfg.beam_width = 5000;
    const auto t0 = clock_type::now();
    const SearchResult r = beam_search(cfg, shared_db());
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    expect(cr, r.best_size() == 100, "n=7 beam width 5000 finds 100",
           "got " + show(r.best_size()));
    expect(cr, secs <= 13.1, "n=7 search within 13.1s", show(secs) + "s");
  }
  return cr;
}

CriterionResult criterion_9_property_suites() {
  CriterionResult cr{9, "property suites", 300.0};
  const auto alphabet = peak_pit_rules();

  // Commutation as strict equality, exhaustive at n=4. Not a theorem (see
  // criterion 7); counted and reported as specified.
  std::size_t equal_cases = 0, total_cases = 0;
  std::size_t inclusion_bad = 0;
  std::string example;
  for (int code = 0; code < 256; ++code) {
    Trs trs(4);
    int c = code;
    for (std::size_t s = 0; s < 4; ++s, c /= 4) trs.assign(s, alphabet[c % 4]);
    const Domain d = build_domain(trs);
    detail::for_each_subset(4, 3, [&](std::span<const int> subset) {
      const std::vector<Alternative> sub(subset.begin(), subset.end());
      const Domain lhs = restrict_domain(d, sub);
      const Domain rhs = build_domain(restrict_trs(trs, sub));
      ++total_cases;
      if (lhs == rhs) ++equal_cases;
      else if (example.empty())
        example = encode_state(trs).digits + " / {" + show(sub[0]) + "," + show(sub[1]) +
                  "," + show(sub[2]) + "}";
      for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!rhs.contains(lhs.at(i))) ++inclusion_bad;
    });
  }
  expect(cr, equal_cases == total_cases,
         "restriction commutes with construction as strict equality (exhaustive n=4)",
         show(equal_cases) + "/" + show(total_cases) +
             " subset cases equal; first unequal: " + example);

  // randomized n=5..8: inclusion always; prefix-ordering lemma
  std::mt19937_64 rng(88);
  bool prefix_ok = true;
  for (int n : {5, 6, 7, 8}) {
    for (int it = 0; it < (n <= 6 ? 20 : 5); ++it) {
      const Trs trs = random_full_trs(n, rng);
      const Domain d = build_domain(trs);
      for (int k = 3; k < n; ++k) {
        std::vector<Alternative> sub;
        for (int a = 1; a <= n && static_cast<int>(sub.size()) < k; ++a)
          if (static_cast<int>(rng() % (n - a + 1)) < k - static_cast<int>(sub.size()))
            sub.push_back(a);
        const Domain lhs = restrict_domain(d, sub);
        const Domain rhs = build_domain(restrict_trs(trs, sub));
        for (std::size_t i = 0; i < lhs.size(); ++i)
          if (!rhs.contains(lhs.at(i))) ++inclusion_bad;
      }
      Trs prefix(n);
      const std::size_t len = rng() % (triple_count(n) + 1);
      for (std::size_t s = 0; s < len; ++s) prefix.assign(s, alphabet[rng() % 4]);
      detail::for_each_subset(n, 5, [&](std::span<const int> subset) {
        const std::vector<Alternative> sub(subset.begin(), subset.end());
        prefix_ok = prefix_ok && restrict_trs(prefix, sub).is_prefix_assigned();
      });
    }
  }
  expect(cr, inclusion_bad == 0,
         "restrictions of built domains lie inside the restricted systems' domains "
         "(exhaustive n=4, randomized n=5..8)",
         show(inclusion_bad) + " violations");
  expect(cr, prefix_ok,
         "assigned prefixes restrict to assigned prefixes on every 5-subset");

  // encode/decode round trips
  bool roundtrip_ok = true;
  for (int n : {4, 5, 6}) {
    for (int it = 0; it < 333; ++it) {
      Trs trs(n);
      for (std::size_t s = 0; s < trs.slot_count(); ++s)
        if (rng() % 3) trs.assign(s, alphabet[rng() % 4]);
      roundtrip_ok = roundtrip_ok && decode_state(encode_state(trs), n) == trs;
    }
  }
  expect(cr, roundtrip_ok, "state keys round-trip on 999 random systems");

  // kendall metric axioms
  bool metric_ok = true;
  for (int n : {4, 6, 8}) {
    std::vector<Alternative> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    auto draw = [&] {
      std::shuffle(seq.begin(), seq.end(), rng);
      return LinearOrder::from_sequence(seq);
    };
    for (int it = 0; it < 100; ++it) {
      const LinearOrder a = draw(), b = draw(), c = draw();
      const int ab = kendall_distance(a, b);
      metric_ok = metric_ok && ab == kendall_distance(b, a);
      metric_ok = metric_ok && ((ab == 0) == (a == b));
      metric_ok = metric_ok && ab <= kendall_distance(a, c) + kendall_distance(c, b);
    }
  }
  expect(cr, metric_ok, "kendall distance satisfies the metric axioms");

  // beam determinism
  BeamConfig cfg;
  cfg.n = 6;
  cfg.beam_width = 300;
  cfg.stage_split_triple = 9;
  cfg.chunk_count = 3;
  cfg.seed = 555;
  auto keys = [](const SearchResult& r) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& h : r.hits) out.emplace_back(encode_state(h.trs).digits, h.size);
    return out;
  };
  const bool beam_det = keys(beam_search(cfg, shared_db())) ==
                        keys(beam_search(cfg, shared_db()));
  const bool staged_det = keys(staged_search(cfg, shared_db())) ==
                          keys(staged_search(cfg, shared_db()));
  expect(cr, beam_det && staged_det, "beam and staged searches are deterministic per seed");
  return cr;
}

CriterionResult criterion_10_statistical_smoke() {
  CriterionResult cr{10, "statistical smoke tests (non-blocking)", 600.0};
  cr.blocking = false;

  {
    AnnealConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 1;
    const LocalSearchResult r5 = simulated_annealing(5, cfg);
    expect(cr, r5.size == 20, "simulated annealing reaches 20 on five alternatives",
           "got " + show(r5.size));
    const LocalSearchResult r6 = simulated_annealing(6, cfg);
    expect(cr, r6.size == 45, "simulated annealing reaches 45 on six alternatives",
           "got " + show(r6.size));
  }

  // Rank correlation between the weighted value and the true size over
  // random fully assigned n=6 systems of size > 28 (sparse: ~0.03% of
  // uniform draws).
  std::mt19937_64 rng(101);
  std::vector<double> sizes, values;
  for (int it = 0; it < 400000; ++it) {
    const Trs trs = random_full_trs(6, rng);
    const std::size_t size = build_domain(trs).size();
    if (size <= 28) continue;
    sizes.push_back(static_cast<double>(size));
    values.push_back(
        static_cast<double>(heuristic_value(trs, shared_db(), default_weights())));
  }
  auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i + j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  double rho = 0;
  if (sizes.size() >= 3) {
    const auto rx = ranks(values), ry = ranks(sizes);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
      mx += rx[i];
      my += ry[i];
    }
    mx /= static_cast<double>(rx.size());
    my /= static_cast<double>(ry.size());
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
      sxy += (rx[i] - mx) * (ry[i] - my);
      sxx += (rx[i] - mx) * (rx[i] - mx);
      syy += (ry[i] - my) * (ry[i] - my);
    }
    rho = sxy / std::sqrt(sxx * syy);
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "rho=%.3f over %zu domains of size >28 from 400000 uniform draws "
                "(the positive trend is visible; 0.5 is not met under uniform "
                "sampling, whose >28 tail is tiny and tie-heavy)",
                rho, sizes.size());
  expect(cr, rho >= 0.5, "rank correlation of value vs size is at least 0.5", buf);
  return cr;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) g_slow = true;

  std::vector<CriterionResult (*)()> criteria{
      criterion_1_rule_semantics,   criterion_2_alternating_sizes,
      criterion_3_record_verification, criterion_4_subset_distributions,
      criterion_5_median_graph_stats,  criterion_6_lookup_db,
      criterion_7_heuristic_consistency, criterion_8_search_rediscovery,
      criterion_9_property_suites,  criterion_10_statistical_smoke,
  };

  int blocking_failures = 0;
  for (auto* fn : criteria) {
    const auto t0 = clock_type::now();
    CriterionResult cr = fn();
    cr.elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool in_budget = cr.elapsed <= cr.limit_secs;
    const bool pass = cr.pass() && in_budget;
    const char* verdict = pass ? "PASS" : (cr.blocking ? "FAIL" : "WARN");
    if (!pass && cr.blocking) ++blocking_failures;
    std::printf("criterion %2d  %s  (%.2fs of %.0fs)  %s\n", cr.id, verdict, cr.elapsed,
                cr.limit_secs, cr.title.c_str());
    for (const Check& c : cr.checks) {
      if (c.pass) continue;
      std::printf("              - failed: %s%s%s\n", c.name.c_str(),
                  c.note.empty() ? "" : " — ", c.note.c_str());
    }
    if (!in_budget) std::printf("              - failed: exceeded the time budget\n");
  }
  std::printf("%d blocking criterion failure(s)\n", blocking_failures);
  return blocking_failures == 0 ? 0 : 1;
}
