// cdforge — construct, search, analyze and verify Condorcet domains.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cdforge/analysis.hpp"
#include "cdforge/baselines.hpp"
#include "cdforge/io.hpp"
#include "cdforge/lookup_db.hpp"
#include "cdforge/reference.hpp"
#include "cdforge/search.hpp"

namespace fs = std::filesystem;
using namespace cdforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

fs::path default_db_path() {
  if (const char* env = std::getenv("CDFORGE_DB")) return env;
  return "cd5.db";
}

fs::path default_data_dir() {
  if (const char* env = std::getenv("CDFORGE_DATA")) return env;
  return "data";
}

// "17:1,18:2,19:3,20:4"; decimal weights switch the whole vector to
// thousandths (fixed point), which leaves the ranking unchanged.
WeightVector parse_weights(const std::string& spec) {
  std::vector<std::pair<int, double>> entries;
  bool fractional = false;
  std::size_t at = 0;
  while (at < spec.size()) {
    std::size_t end = spec.find(',', at);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(at, end - at);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("weights: expected size:weight, got '" + item + "'");
    const int size = std::stoi(item.substr(0, colon));
    const double weight = std::stod(item.substr(colon + 1));
    if (size < 1 || size > 20)
      throw std::invalid_argument("weights: size must be 1..20");
    if (weight < 0) throw std::invalid_argument("weights: must be non-negative");
    if (weight != std::floor(weight)) fractional = true;
    entries.emplace_back(size, weight);
    at = end + 1;
  }
  WeightVector w{};
  for (const auto& [size, weight] : entries)
    w.w[size - 1] = fractional ? std::llround(weight * 1000) : std::llround(weight);
  return w;
}

// "4", "4..9", or "4,6,9"
std::vector<int> parse_k_spec(const std::string& spec) {
  std::vector<int> ks;
  std::size_t at = 0;
  while (at < spec.size()) {
    std::size_t end = spec.find(',', at);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(at, end - at);
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      ks.push_back(std::stoi(item));
    } else {
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("k range is empty: " + item);
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
    at = end + 1;
  }
  if (ks.empty()) throw std::invalid_argument("no k values given");
  return ks;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

LookupDb load_db_or_hint(const fs::path& path) {
  if (!fs::exists(path))
    throw std::runtime_error("database " + path.string() +
                             " not found (run `cdforge build-db --out " + path.string() +
                             "` first, or set CDFORGE_DB)");
  return load_db(path);
}

// ---------------------------------------------------------------- build-db

int cmd_build_db(const fs::path& out) {
  const auto start = clock_type::now();
  const LookupDb db = build_db();
  save_db(db, out);
  const double secs = seconds_since(start);

  RunManifest manifest;
  manifest.command = "build-db";
  manifest.config = {{"out", out.string()}};
  manifest.db_fingerprint = fingerprint_hex(LookupDb::alphabet_fingerprint());
  manifest.wall_time_secs = secs;
  manifest.best_size = db.lookup("");
  manifest.outputs[out.filename().string()] = crc32_hex_of_file(out);
  manifest.save(out.string() + ".manifest.json");

  std::cout << "wrote " << out.string() << " (" << fs::file_size(out) << " bytes, "
            << "fingerprint " << manifest.db_fingerprint << ") in " << secs << "s\n";
  return kExitOk;
}

// ------------------------------------------------------------------ search

struct SearchOptions {
  int n = 0;
  int beam = 10000;
  std::string weights = "17:1,18:2,19:3,20:4";
  fs::path db_path = default_db_path();
  std::uint64_t seed = 0;
  fs::path out_dir = "results";
  bool staged = false;
  int split_at = 0;
  int chunks = 1;
  int chunk_id = -1;
  int stage1_beam = 0;
  int threads = 1;
  bool dynamic = false;
};

int cmd_search(const SearchOptions& opt) {
  BeamConfig cfg;
  cfg.n = opt.n;
  cfg.beam_width = opt.beam;
  cfg.weights = parse_weights(opt.weights);
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  if (opt.staged) {
    cfg.stage_split_triple = opt.split_at;
    cfg.chunk_count = opt.chunks;
    if (opt.chunk_id >= 0) cfg.chunk_id = opt.chunk_id;
    if (opt.stage1_beam > 0) cfg.stage1_width = opt.stage1_beam;
  }

  const auto start = clock_type::now();
  SearchResult result;
  std::string db_fp;
  if (opt.dynamic) {
    result = dynamic_beam_search(cfg);
  } else {
    const LookupDb db = load_db_or_hint(opt.db_path);
    db_fp = fingerprint_hex(LookupDb::alphabet_fingerprint());
    result = opt.staged ? staged_search(cfg, db) : beam_search(cfg, db);
  }
  const double secs = seconds_since(start);

  if (result.hits.empty()) throw std::runtime_error("search produced no candidates");
  fs::create_directories(opt.out_dir);
  emit_trs_file(result.hits.front().trs, opt.out_dir / "best.trs");
  emit_domain_file(build_domain(result.hits.front().trs), opt.out_dir / "best.domain");
  {
    std::ofstream csv(opt.out_dir / "sizes.csv", std::ios::trunc);
    csv << "size,count\n";
    for (const auto& [size, count] : result.size_counts)
      csv << size << ',' << count << '\n';
  }

  RunManifest manifest;
  manifest.command = "search";
  manifest.config = {{"n", opt.n},
                     {"beam", opt.beam},
                     {"weights", opt.weights},
                     {"staged", opt.staged},
                     {"split_at", opt.split_at},
                     {"chunks", opt.chunks},
                     {"chunk_id", opt.chunk_id},
                     {"stage1_beam", opt.stage1_beam},
                     {"dynamic", opt.dynamic},
                     {"threads", opt.threads}};
  manifest.seed = opt.seed;
  manifest.db_fingerprint = db_fp;
  manifest.wall_time_secs = secs;
  manifest.best_size = result.best_size();
  for (const char* name : {"best.trs", "best.domain", "sizes.csv"})
    manifest.outputs[name] = crc32_hex_of_file(opt.out_dir / name);
  manifest.save(opt.out_dir / "manifest.json");

  std::cout << "best size " << result.best_size() << " (" << result.hits.size()
            << " distinct domains) in " << secs << "s\n";
  for (const auto& [size, count] : result.size_counts)
    std::cout << "  size " << size << ": " << count << "\n";
  std::cout << "results in " << opt.out_dir.string() << "/\n";
  return kExitOk;
}

// ------------------------------------------------------------------- stats

int cmd_stats(const fs::path& domain_file, const fs::path& csv_out) {
  const Domain domain = parse_domain_file(domain_file);
  const DomainStats s = domain_stats(domain);
  std::cout << "size                " << s.size << "\n"
            << "width               " << s.width << "\n"
            << "radius              " << s.radius << "\n"
            << "centre points       " << s.centre_count << "\n"
            << "isomorphic domains  " << s.isomorphic_count << "\n";
  if (!csv_out.empty()) {
    std::ofstream csv(csv_out, std::ios::trunc);
    csv << "size,width,radius,centre_points,isomorphic\n"
        << s.size << ',' << s.width << ',' << s.radius << ',' << s.centre_count << ','
        << s.isomorphic_count << '\n';
    std::cout << "csv written to " << csv_out.string() << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- subsets

int cmd_subsets(const fs::path& domain_file, const std::string& k_spec,
                const fs::path& out) {
  const Domain domain = parse_domain_file(domain_file);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + out.string());
    os = &file;
  }
  *os << "k,size,count\n";
  for (int k : parse_k_spec(k_spec))
    for (const auto& [size, count] : subset_size_distribution(domain, k))
      *os << k << ',' << size << ',' << count << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const fs::path& trs_file, const fs::path& domain_file) {
  const Trs trs = parse_trs_file(trs_file);
  std::size_t dups = 0;
  const Domain listed = parse_domain_file(domain_file, &dups);
  if (dups) std::cerr << "warning: " << dups << " duplicate orders dropped\n";
  if (trs.alternatives() != listed.alternatives())
    throw verification_error("alternative counts differ: rules cover " +
                             std::to_string(trs.alternatives()) + ", listing has " +
                             std::to_string(listed.alternatives()));
  const RecordReport r = verify_record(trs, listed);
  auto yn = [](bool b) { return b ? "yes" : "NO"; };
  std::cout << "built size   " << r.built_size << "\n"
            << "listed size  " << r.listed_size << "\n"
            << "size match   " << yn(r.size_match) << "\n"
            << "set match    " << yn(r.set_match) << "\n"
            << "unitary      " << yn(r.unitary) << "\n";
  for (const auto& o : r.missing) std::cout << "  listed but not built: " << o.str() << "\n";
  for (const auto& o : r.extra) std::cout << "  built but not listed: " << o.str() << "\n";
  return r.ok() ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- baseline

struct BaselineOptions {
  std::string algo;
  int n = 0;
  std::uint64_t seed = 0;
  int restarts = 20;
  double budget_secs = 0;
  int alphabet = 4;
  double t0 = 5.0;
  double cooling = 0.995;
  int steps = 200;
  double tmin = 0.05;
  fs::path out_dir;
};

int cmd_baseline(const BaselineOptions& opt) {
  const auto start = clock_type::now();
  auto single = [&](std::uint64_t seed) {
    if (opt.algo == "hc") return hill_climb(opt.n, 0, seed, opt.alphabet);
    AnnealConfig cfg;
    cfg.initial_temperature = opt.t0;
    cfg.cooling_rate = opt.cooling;
    cfg.steps_per_temperature = opt.steps;
    cfg.min_temperature = opt.tmin;
    cfg.restarts = 0;
    cfg.seed = seed;
    cfg.rule_alphabet = opt.alphabet;
    return simulated_annealing(opt.n, cfg);
  };

  LocalSearchResult best;
  int runs = 0;
  if (opt.budget_secs > 0) {
    // budget mode: independent single runs on derived seeds until time is up
    do {
      LocalSearchResult r = single(opt.seed + static_cast<std::uint64_t>(runs));
      best.evaluations += r.evaluations;
      if (r.size > best.size) {
        best.size = r.size;
        best.trs = r.trs;
      }
      ++runs;
    } while (seconds_since(start) < opt.budget_secs);
  } else if (opt.algo == "hc") {
    best = hill_climb(opt.n, opt.restarts, opt.seed, opt.alphabet);
    runs = opt.restarts + 1;
  } else {
    AnnealConfig cfg;
    cfg.initial_temperature = opt.t0;
    cfg.cooling_rate = opt.cooling;
    cfg.steps_per_temperature = opt.steps;
    cfg.min_temperature = opt.tmin;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    cfg.rule_alphabet = opt.alphabet;
    best = simulated_annealing(opt.n, cfg);
    runs = opt.restarts + 1;
  }
  const double secs = seconds_since(start);
  std::cout << opt.algo << " n=" << opt.n << ": best size " << best.size << " ("
            << runs << " runs, " << best.evaluations << " evaluations, " << secs
            << "s)\n";

  if (!opt.out_dir.empty()) {
    fs::create_directories(opt.out_dir);
    emit_trs_file(best.trs, opt.out_dir / "best.trs");
    emit_domain_file(build_domain(best.trs), opt.out_dir / "best.domain");
    RunManifest manifest;
    manifest.command = "baseline";
    manifest.config = {{"algo", opt.algo},     {"n", opt.n},
                       {"restarts", opt.restarts}, {"budget_secs", opt.budget_secs},
                       {"alphabet", opt.alphabet}, {"t0", opt.t0},
                       {"cooling", opt.cooling},   {"steps", opt.steps},
                       {"tmin", opt.tmin},         {"runs_completed", runs}};
    manifest.seed = opt.seed;
    manifest.wall_time_secs = secs;
    manifest.best_size = best.size;
    for (const char* name : {"best.trs", "best.domain"})
      manifest.outputs[name] = crc32_hex_of_file(opt.out_dir / name);
    manifest.save(opt.out_dir / "manifest.json");
    std::cout << "results in " << opt.out_dir.string() << "/\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- repro

struct ReproContext {
  fs::path data_dir;
  bool slow = false;
  int checked = 0;
  int failed = 0;

  void cell(const std::string& what, bool ok) {
    ++checked;
    failed += !ok;
    std::cout << (ok ? "   ok    " : " MISMATCH") << "  " << what << "\n";
  }
  template <typename T, typename U>
  void equal(const std::string& what, const T& got, const U& expected) {
    const bool ok = got == static_cast<T>(expected);
    ++checked;
    failed += !ok;
    std::cout << (ok ? "   ok    " : " MISMATCH") << "  " << what << ": expected "
              << expected << ", got " << got << "\n";
  }
};

Domain domain_of_strings(const std::vector<std::string>& strs) {
  std::vector<LinearOrder> orders;
  orders.reserve(strs.size());
  for (const auto& s : strs) orders.push_back(LinearOrder::parse(s));
  return Domain::from_orders(orders.front().size(), orders);
}

void repro_scheme5_rules(ReproContext& ctx) {
  const Trs fb5 = alternating_scheme_trs(5);
  for (const auto& [t, r] : reference::scheme5_rules())
    ctx.cell("scheme-5 rule (" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                 std::to_string(t.z) + ") = " + r.str(),
             fb5.rule_for(t) == r);
}

void repro_three_alternatives(ReproContext& ctx) {
  const auto& rows = reference::three_alternative_domains();
  std::vector<Domain> built;
  for (const auto& [rule, orders] : rows) {
    Trs trs(3);
    trs.assign(Triple(1, 2, 3), rule);
    built.push_back(build_domain(trs));
    ctx.cell("domain of " + rule.str() + " on (1,2,3)",
             built.back() == domain_of_strings(orders));
  }
  // listed pairwise: (1N3,2N3), (3N1,2N1), (1N2,3N2) are isomorphic pairs
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
    ctx.cell("rules " + rows[p].first.str() + " and " + rows[p + 1].first.str() +
                 " give isomorphic domains",
             related);
  }
}

void repro_scheme5_domain(ReproContext& ctx) {
  const Domain d = build_domain(alternating_scheme_trs(5));
  ctx.equal("scheme-5 domain size", d.size(), 20u);
  ctx.cell("scheme-5 domain orders", d == domain_of_strings(reference::scheme5_orders()));
}

void repro_scheme_family(ReproContext& ctx) {
  for (const auto& [n, row] : reference::alternating_stats()) {
    if (n > 11 && !ctx.slow) continue;
    const Domain d = build_domain(alternating_scheme_trs(n));
    ctx.equal("scheme size n=" + std::to_string(n), d.size(), row.size);
    if (n > (ctx.slow ? 11 : 9)) continue;
    const DomainStats s = domain_stats(d);
    ctx.equal("scheme width n=" + std::to_string(n), s.width, row.width);
    ctx.equal("scheme radius n=" + std::to_string(n), s.radius, row.radius);
    ctx.equal("scheme centre points n=" + std::to_string(n), s.centre_count,
              row.centre_count);
    ctx.equal("scheme isomorphic count n=" + std::to_string(n), s.isomorphic_count,
              row.isomorphic_count);
  }
}

void repro_record(ReproContext& ctx, const char* trs_name, const char* domain_name,
                  std::size_t size, const char* label) {
  const Trs trs = parse_trs_file(ctx.data_dir / trs_name);
  const Domain listed = parse_domain_file(ctx.data_dir / domain_name);
  const RecordReport r = verify_record(trs, listed);
  ctx.equal(std::string(label) + " built size", r.built_size, size);
  ctx.cell(std::string(label) + " built set equals the listing", r.set_match);
  ctx.cell(std::string(label) + " listing is unitary", r.unitary);
}

void repro_record_subsets(ReproContext& ctx, const char* domain_name,
                          const std::map<int, reference::SizeDistribution>& expected,
                          const char* label) {
  const Domain d = parse_domain_file(ctx.data_dir / domain_name);
  for (const auto& [k, dist] : expected) {
    const auto got = subset_size_distribution(d, k);
    ctx.cell(std::string(label) + " subset sizes k=" + std::to_string(k), got == dist);
  }
}

void repro_record_stats(ReproContext& ctx, const char* domain_name,
                        const reference::StatsRow& row, const char* label) {
  const Domain d = parse_domain_file(ctx.data_dir / domain_name);
  const DomainStats s = domain_stats(d);
  ctx.equal(std::string(label) + " size", s.size, row.size);
  ctx.equal(std::string(label) + " width", s.width, row.width);
  ctx.equal(std::string(label) + " radius", s.radius, row.radius);
  ctx.equal(std::string(label) + " centre points", s.centre_count, row.centre_count);
  ctx.equal(std::string(label) + " isomorphic count", s.isomorphic_count,
            row.isomorphic_count);
}

int cmd_repro(const std::string& table, const fs::path& data_dir, bool slow) {
  ReproContext ctx{data_dir, slow};
  const auto run = [&](const std::string& id) {
    if (id == "t1" || id == "scheme5-rules") return repro_scheme5_rules(ctx);
    if (id == "t2" || id == "three-alt") return repro_three_alternatives(ctx);
    if (id == "t3" || id == "scheme5-domain") return repro_scheme5_domain(ctx);
    if (id == "t4" || id == "scheme-family") return repro_scheme_family(ctx);
    if (id == "t6" || id == "record10")
      return repro_record(ctx, "trs_n10_1082.txt", "domain_n10_1082.txt", 1082,
                          "record-10");
    if (id == "t7" || id == "record10-subsets")
      return repro_record_subsets(ctx, "domain_n10_1082.txt",
                                  reference::record10_subset_sizes(), "record-10");
    if (id == "t8" || id == "record10-stats")
      return repro_record_stats(ctx, "domain_n10_1082.txt", reference::record10_stats(),
                                "record-10");
    if (id == "t9" || id == "record11")
      return repro_record(ctx, "trs_n11_2349.txt", "domain_n11_2349.txt", 2349,
                          "record-11");
    if (id == "t10" || id == "record11-subsets")
      return repro_record_subsets(ctx, "domain_n11_2349.txt",
                                  reference::record11_subset_sizes(), "record-11");
    if (id == "t11" || id == "record11-stats")
      return repro_record_stats(ctx, "domain_n11_2349.txt", reference::record11_stats(),
                                "record-11");
    throw std::invalid_argument("unknown repro target '" + id + "'");
  };
  if (table == "all") {
    for (const char* id : {"t1", "t2", "t3", "t4", "t6", "t7", "t8", "t9", "t10", "t11"})
      run(id);
  } else {
    run(table);
  }
  std::cout << ctx.checked << " cells checked, " << ctx.failed << " mismatched\n";
  return ctx.failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Condorcet domain construction, search and verification"};
  app.require_subcommand(1);
  std::function<int()> action;

  // build-db
  {
    auto* cmd = app.add_subcommand("build-db",
                                   "Precompute the five-alternative lookup database");
    auto out = std::make_shared<fs::path>(default_db_path());
    cmd->add_option("--out", *out, "output file (default $CDFORGE_DB or cd5.db)");
    cmd->callback([out, &action] { action = [out] { return cmd_build_db(*out); }; });
  }
  // search
  {
    auto* cmd = app.add_subcommand("search", "Database-guided beam search");
    auto opt = std::make_shared<SearchOptions>();
    cmd->add_option("--n", opt->n, "alternative count")->required();
    cmd->add_option("--beam", opt->beam, "beam width (stage-2 width when staged)");
    cmd->add_option("--weights", opt->weights, "score weights, size:weight pairs");
    cmd->add_option("--db", opt->db_path, "lookup database path");
    cmd->add_option("--seed", opt->seed, "seed for the staged shuffle");
    cmd->add_option("--out", opt->out_dir, "results directory");
    cmd->add_flag("--staged", opt->staged, "two-stage chunked search");
    cmd->add_option("--split-at", opt->split_at, "slots assigned in stage 1");
    cmd->add_option("--chunks", opt->chunks, "stage-1 survivor chunk count");
    cmd->add_option("--chunk-id", opt->chunk_id, "run only this chunk (array jobs)");
    cmd->add_option("--stage1-beam", opt->stage1_beam,
                    "stage-1 beam width (default: --beam)");
    cmd->add_option("--threads", opt->threads, "worker threads (deterministic)");
    cmd->add_flag("--dynamic", opt->dynamic,
                  "dynamic triple selection with exact partial sizes (n <= 7, no db)");
    cmd->callback([opt, &action] { action = [opt] { return cmd_search(*opt); }; });
  }
  // stats
  {
    auto* cmd = app.add_subcommand("stats", "Median-graph stats of a domain file");
    auto domain = std::make_shared<fs::path>();
    auto csv = std::make_shared<fs::path>();
    cmd->add_option("--domain", *domain, "domain file")->required();
    cmd->add_option("--csv", *csv, "also write a csv row here");
    cmd->callback([domain, csv, &action] {
      action = [domain, csv] { return cmd_stats(*domain, *csv); };
    });
  }
  // subsets
  {
    auto* cmd = app.add_subcommand("subsets", "Subset-domain size distributions");
    auto domain = std::make_shared<fs::path>();
    auto kspec = std::make_shared<std::string>();
    auto out = std::make_shared<fs::path>();
    cmd->add_option("--domain", *domain, "domain file")->required();
    cmd->add_option("--k", *kspec, "subset sizes, e.g. 4..9 or 4,6")->required();
    cmd->add_option("--out", *out, "write csv here instead of stdout");
    cmd->callback([domain, kspec, out, &action] {
      action = [domain, kspec, out] { return cmd_subsets(*domain, *kspec, *out); };
    });
  }
  // verify
  {
    auto* cmd = app.add_subcommand("verify",
                                   "Build a rule system and compare against a listing");
    auto trs = std::make_shared<fs::path>();
    auto domain = std::make_shared<fs::path>();
    cmd->add_option("--trs", *trs, "rule-system file")->required();
    cmd->add_option("--domain", *domain, "domain listing")->required();
    cmd->callback([trs, domain, &action] {
      action = [trs, domain] { return cmd_verify(*trs, *domain); };
    });
  }
  // baseline
  {
    auto* cmd = app.add_subcommand("baseline", "Local-search baselines (hc, sa)");
    auto opt = std::make_shared<BaselineOptions>();
    cmd->add_option("--algo", opt->algo, "hc or sa")
        ->required()
        ->check(CLI::IsMember({"hc", "sa"}));
    cmd->add_option("--n", opt->n, "alternative count (3..8)")->required();
    cmd->add_option("--seed", opt->seed, "rng seed");
    cmd->add_option("--restarts", opt->restarts, "additional random restarts");
    cmd->add_option("--budget-secs", opt->budget_secs,
                    "wall-clock budget; overrides --restarts");
    cmd->add_option("--alphabet", opt->alphabet, "rule alphabet size (4 or 6)");
    cmd->add_option("--t0", opt->t0, "sa: initial temperature");
    cmd->add_option("--cooling", opt->cooling, "sa: geometric cooling rate");
    cmd->add_option("--steps", opt->steps, "sa: steps per temperature");
    cmd->add_option("--tmin", opt->tmin, "sa: final temperature");
    cmd->add_option("--out", opt->out_dir, "results directory (optional)");
    cmd->callback([opt, &action] { action = [opt] { return cmd_baseline(*opt); }; });
  }
  // repro
  {
    auto* cmd = app.add_subcommand(
        "repro", "Re-derive the published reference tables and compare cell by cell");
    auto table = std::make_shared<std::string>("all");
    auto data = std::make_shared<fs::path>(default_data_dir());
    auto slow = std::make_shared<bool>(false);
    cmd->add_option("--table", *table,
                    "t1..t4, t6..t11, a content alias, or `all`");
    cmd->add_option("--data", *data, "data directory with the shipped files");
    cmd->add_flag("--slow", *slow,
                  "include the large rows (scheme sizes n=12,13; stats n=10,11)");
    cmd->callback([table, data, slow, &action] {
      action = [table, data, slow] { return cmd_repro(*table, *data, *slow); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const db_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
