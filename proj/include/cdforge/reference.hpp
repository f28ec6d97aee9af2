#ifndef CDFORGE_REFERENCE_HPP
#define CDFORGE_REFERENCE_HPP

// Published reference values for the domains this project ships: the
// alternating-scheme family and the two record domains (1082 orders on ten
// alternatives, 2349 on eleven). The repro command checks the library
// against these tables cell by cell.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cdforge/rules.hpp"

namespace cdforge::reference {

struct StatsRow {
  std::size_t size = 0;
  int width = 0;
  int radius = 0;
  std::size_t centre_count = 0;
  std::size_t isomorphic_count = 0;
};

/// Alternating-scheme domain stats by alternative count (4..13).
inline const std::map<int, StatsRow>& alternating_stats() {
  static const std::map<int, StatsRow> rows{
      {4, {9, 6, 3, 1, 9}},         {5, {20, 10, 5, 2, 10}},
      {6, {45, 15, 8, 6, 45}},      {7, {100, 21, 11, 10, 50}},
      {8, {222, 28, 14, 9, 222}},   {9, {488, 36, 18, 16, 244}},
      {10, {1069, 45, 23, 57, 1069}}, {11, {2324, 55, 28, 102, 1162}},
      {12, {5034, 66, 33, 93, 5034}}, {13, {10840, 78, 39, 172, 5420}},
  };
  return rows;
}

inline const StatsRow& record10_stats() {
  static const StatsRow row{1082, 41, 21, 57, 1082};
  return row;
}

inline const StatsRow& record11_stats() {
  static const StatsRow row{2349, 52, 26, 51, 2349};
  return row;
}

using SizeDistribution = std::map<std::size_t, std::size_t>;

/// Subset-domain size distributions of the 1082 record, k = 4..9.
inline const std::map<int, SizeDistribution>& record10_subset_sizes() {
  static const std::map<int, SizeDistribution> dist{
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
  return dist;
}

/// Subset-domain size distributions of the 2349 record, k = 4..10.
inline const std::map<int, SizeDistribution>& record11_subset_sizes() {
  static const std::map<int, SizeDistribution> dist{
      {4, {{8, 143}, {9, 187}}},
      {5, {{16, 28}, {17, 46}, {18, 5}, {19, 279}, {20, 104}}},
      {6,
       {{32, 3}, {35, 10}, {36, 9}, {39, 35}, {40, 2}, {41, 73}, {42, 164}, {43, 79},
        {44, 35}, {45, 52}}},
      {7,
       {{74, 3}, {79, 3}, {85, 12}, {86, 3}, {87, 9}, {88, 3}, {89, 15}, {91, 19},
        {92, 44}, {93, 39}, {94, 12}, {95, 16}, {96, 39}, {97, 52}, {98, 42},
        {100, 19}}},
      {8,
       {{179, 3}, {184, 1}, {187, 1}, {192, 1}, {194, 3}, {196, 8}, {200, 3},
        {201, 2}, {202, 8}, {204, 6}, {205, 2}, {207, 7}, {209, 10}, {210, 3},
        {211, 12}, {212, 17}, {213, 11}, {214, 2}, {215, 8}, {216, 13}, {217, 2},
        {218, 30}, {219, 8}, {222, 4}}},
      {9,
       {{415, 1}, {426, 1}, {431, 1}, {448, 2}, {451, 2}, {452, 1}, {457, 1},
        {460, 1}, {466, 4}, {468, 2}, {470, 2}, {473, 4}, {475, 3}, {478, 4},
        {479, 3}, {480, 4}, {481, 11}, {484, 4}, {485, 4}}},
      {10,
       {{1021, 1}, {1026, 1}, {1035, 1}, {1045, 2}, {1053, 1}, {1068, 1}, {1074, 2},
        {1078, 2}}},
  };
  return dist;
}

/// The six three-alternative domains, one per unitary rule on (1,2,3); they
/// fall into three isomorphic pairs in this listed order.
inline const std::vector<std::pair<NeverRule, std::vector<std::string>>>&
three_alternative_domains() {
  static const std::vector<std::pair<NeverRule, std::vector<std::string>>> rows{
      {rules::r1N3, {"123", "132", "213", "312"}},
      {rules::r2N3, {"123", "213", "231", "321"}},
      {rules::r3N1, {"123", "132", "213", "231"}},
      {rules::r2N1, {"123", "132", "312", "321"}},
      {rules::r1N2, {"123", "132", "231", "321"}},
      {rules::r3N2, {"123", "213", "312", "321"}},
  };
  return rows;
}

/// The alternating-scheme rule assignment on five alternatives.
inline const std::vector<std::pair<Triple, NeverRule>>& scheme5_rules() {
  static const std::vector<std::pair<Triple, NeverRule>> rows{
      {Triple(1, 2, 3), rules::r2N3}, {Triple(1, 2, 4), rules::r2N3},
      {Triple(1, 2, 5), rules::r2N3}, {Triple(1, 3, 4), rules::r2N1},
      {Triple(1, 3, 5), rules::r2N1}, {Triple(1, 4, 5), rules::r2N3},
      {Triple(2, 3, 4), rules::r2N1}, {Triple(2, 3, 5), rules::r2N1},
      {Triple(2, 4, 5), rules::r2N3}, {Triple(3, 4, 5), rules::r2N3},
  };
  return rows;
}

/// Its 20-order domain.
inline const std::vector<std::string>& scheme5_orders() {
  static const std::vector<std::string> rows{
      "12453", "12435", "12345", "54321", "45321", "54231", "45231",
      "42531", "24531", "54213", "45213", "42513", "42153", "42135",
      "24513", "24153", "24135", "21453", "21435", "21345",
  };
  return rows;
}

}  // namespace cdforge::reference

#endif  // CDFORGE_REFERENCE_HPP
