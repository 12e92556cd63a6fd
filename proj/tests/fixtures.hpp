#ifndef BIBENCH_TESTS_FIXTURES_HPP_
#define BIBENCH_TESTS_FIXTURES_HPP_

// Published per-SDS quartile rows for the Physics area, used as consistency
// fixtures: re-deriving the range and low-count tables from them must
// reproduce the published Physics rows exactly.

#include <vector>

#include "bibench/benchstats.hpp"

inline std::vector<bibench::SummaryRow> physics_h_rows() {
  return {
      {"FIS/01", 745, 2, 4, 6, 22, 4.50, 10.41},
      {"FIS/02", 264, 2, 5, 7, 17, 5.14, 11.06},
      {"FIS/03", 331, 4, 6, 8, 25, 6.29, 14.00},
      {"FIS/04", 133, 2, 4, 6, 11, 4.32, 7.57},
      {"FIS/05", 134, 3, 5, 10, 23, 6.91, 28.59},
      {"FIS/06", 42, 2, 3, 4, 10, 3.21, 4.12},
      {"FIS/07", 197, 2, 4, 6, 13, 4.45, 6.83},
  };
}

inline std::vector<bibench::SummaryRow> physics_g_rows() {
  return {
      {"FIS/01", 745, 3, 6, 10, 37, 6.99, 28.47},
      {"FIS/02", 264, 3, 7, 11, 30, 7.78, 33.74},
      {"FIS/03", 331, 5, 9, 12, 43, 9.79, 44.20},
      {"FIS/04", 133, 3, 6, 11, 22, 6.83, 25.52},
      {"FIS/05", 134, 4, 8, 16, 36, 10.52, 73.18},
      {"FIS/06", 42, 2, 4, 6, 17, 4.64, 14.09},
      {"FIS/07", 197, 3, 6, 9, 20, 6.55, 17.66},
  };
}

#endif  // BIBENCH_TESTS_FIXTURES_HPP_
