#ifndef CDFORGE_IO_HPP
#define CDFORGE_IO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cdforge/detail/checksum.hpp"
#include "cdforge/domain.hpp"
#include "cdforge/trs.hpp"

namespace cdforge {

inline constexpr std::string_view kToolVersion = "0.1.0";

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::filesystem::path& file, int line, const std::string& message)
      : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::ifstream open_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

inline bool skippable_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace detail

/// Rule-system text format: one `x y z RULE` line per triple, RULE one of
/// 1N3 3N1 2N1 2N3 1N2 3N2 or `-` for unassigned. Lines may come in any
/// order; blank lines and `#` comments are ignored. The alternative count is
/// the largest member mentioned unless `expected_n` pins it.
inline Trs parse_trs_file(const std::filesystem::path& path, int expected_n = 0) {
  std::ifstream in = detail::open_text(path);
  struct Row {
    int line;
    Triple triple;
    std::optional<NeverRule> rule;
  };
  std::vector<Row> rows;
  int n = expected_n;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable_line(line)) continue;
    std::istringstream fields(line);
    long long x = 0, y = 0, z = 0;
    std::string token;
    if (!(fields >> x >> y >> z >> token))
      throw parse_error(path, lineno, "expected `x y z RULE`");
    std::string trailing;
    if (fields >> trailing)
      throw parse_error(path, lineno, "unexpected trailing field '" + trailing + "'");
    if (x < 1 || z > kMaxAlternatives || !(x < y && y < z))
      throw parse_error(path, lineno, "triple must be ascending within 1..15");
    if (expected_n && z > expected_n)
      throw parse_error(path, lineno,
                        "triple member exceeds n=" + std::to_string(expected_n));
    Row row{lineno, Triple(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)),
            std::nullopt};
    if (token != "-") {
      static const std::array<std::string_view, 6> known{"1N3", "3N1", "2N1",
                                                         "2N3", "1N2", "3N2"};
      if (std::find(known.begin(), known.end(), token) == known.end())
        throw parse_error(path, lineno, "unknown rule token '" + token + "'");
      row.rule = NeverRule::parse(token);
    }
    n = std::max(n, static_cast<int>(z));
    rows.push_back(row);
  }
  if (n < 3) throw parse_error(path, lineno, "no triples found");
  Trs trs(n);
  std::vector<int> seen(trs.slot_count(), 0);
  for (const Row& row : rows) {
    const std::size_t slot = triple_index(n, row.triple);
    if (seen[slot])
      throw parse_error(path, row.line,
                        "duplicate triple (first at line " + std::to_string(seen[slot]) + ")");
    seen[slot] = row.line;
    if (row.rule) trs.assign(slot, *row.rule);
  }
  return trs;
}

/// Emits every triple in plain (x, y, z) order, unassigned slots as `-`.
inline void emit_trs_file(const Trs& trs, const std::filesystem::path& path) {
  std::vector<Triple> display = triple_order(trs.alternatives());
  std::sort(display.begin(), display.end());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const Triple& t : display) {
    const auto rule = trs.rule_for(t);
    out << t.x << ' ' << t.y << ' ' << t.z << ' ' << (rule ? rule->str() : "-") << '\n';
  }
  if (!out) throw std::runtime_error("short write to " + path.string());
}

/// Domain text format: one order per line in the single-character encoding.
/// Input lines may come in any order; duplicates are dropped (count
/// reported through `duplicates` when given).
inline Domain parse_domain_file(const std::filesystem::path& path,
                                std::size_t* duplicates = nullptr) {
  std::ifstream in = detail::open_text(path);
  std::vector<std::uint64_t> packed;
  int n = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::skippable_line(line)) continue;
    if (n == 0) {
      n = static_cast<int>(line.size());
      if (n < 3 || n > kMaxAlternatives)
        throw parse_error(path, lineno, "order length must be 3..15");
    } else if (static_cast<int>(line.size()) != n) {
      throw parse_error(path, lineno,
                        "inconsistent order length (expected " + std::to_string(n) + ")");
    }
    try {
      packed.push_back(LinearOrder::parse(line).packed());
    } catch (const std::invalid_argument& e) {
      throw parse_error(path, lineno, e.what());
    }
  }
  if (n == 0) throw parse_error(path, lineno, "no orders found");
  const std::size_t raw = packed.size();
  Domain domain = Domain::from_packed(n, std::move(packed));
  if (duplicates) *duplicates = raw - domain.size();
  return domain;
}

inline void emit_domain_file(const Domain& domain, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < domain.size(); ++i) out << domain.at(i).str() << '\n';
  if (!out) throw std::runtime_error("short write to " + path.string());
}

inline std::string crc32_hex_of_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", detail::crc32(bytes));
  return buf;
}

/// Reproducibility sidecar written next to every produced result set:
/// re-running the recorded command/config must reproduce the digests.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};
  std::string db_fingerprint;  // hex, empty when no database involved
  double wall_time_secs = 0;
  std::size_t best_size = 0;
  std::map<std::string, std::string> outputs;  // file name -> crc32 hex

  nlohmann::json to_json() const {
    return {{"command", command},
            {"config", config},
            {"seed", seed},
            {"tool_version", tool_version},
            {"db_fingerprint", db_fingerprint},
            {"wall_time_secs", wall_time_secs},
            {"best_size", best_size},
            {"outputs", outputs}};
  }

  static RunManifest from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.config = j.at("config");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.db_fingerprint = j.at("db_fingerprint").get<std::string>();
    m.wall_time_secs = j.at("wall_time_secs").get<double>();
    m.best_size = j.at("best_size").get<std::size_t>();
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    return m;
  }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_json().dump(2) << '\n';
  }

  static RunManifest load(const std::filesystem::path& path) {
    std::ifstream in = detail::open_text(path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
  }
};

}  // namespace cdforge

#endif  // CDFORGE_IO_HPP
