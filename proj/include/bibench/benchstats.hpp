#ifndef BIBENCH_BENCHSTATS_HPP_
#define BIBENCH_BENCHSTATS_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bibench/indices.hpp"

namespace bibench {

// One descriptive-statistics line of a benchmark table.
//
// Conventions (the published tables do not pin them down, so they are fixed
// here and echoed in the run metadata): quartiles by linear interpolation at
// p*(n-1) between closest ranks, variance with the n-1 denominator.
struct SummaryRow {
  std::string group_code;
  long n = 0;          // researchers with a non-null index
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

// Min/max of the per-SDS medians and maxima within one UDA.
struct RangeRow {
  std::string uda_code;
  double median_min = 0.0;
  double median_max = 0.0;
  double max_min = 0.0;
  double max_max = 0.0;
};

// How many SDSs of a UDA sit at the bottom of the scale.
struct LowCountRow {
  std::string uda_code;
  long n_sds = 0;
  long n_q1_eq_1 = 0;
  long n_median_le_2 = 0;
};

struct ExclusionReport {
  long excluded_total = 0;
  long zero_publications = 0;
  long zero_citations = 0;
};

using ProfileGroups = std::map<std::string, std::vector<ResearcherProfile>>;

ProfileGroups group_by_sds(std::span<const ResearcherProfile> profiles);

// Keeps the SDSs where at least half of the researchers published at least
// one article in the window; the 50% boundary is inclusive and empty groups
// are dropped.
ProfileGroups activity_filter(const ProfileGroups& groups);

ExclusionReport exclusion_report(std::span<const ResearcherProfile> profiles);

// Descriptive statistics over a nonempty group of index values.
SummaryRow summarize(std::span<const double> values,
                     std::string group_code = "");

// Per-UDA ranges over the SDS rows of that UDA.
std::vector<RangeRow> range_rows(
    const std::map<std::string, std::vector<SummaryRow>>& sds_rows_by_uda);

std::vector<LowCountRow> low_counts(
    const std::map<std::string, std::vector<SummaryRow>>& sds_rows_by_uda);

// Midrank percentile of `value` within a nonempty group:
// 100 * (count_below + 0.5 * count_equal) / n.
double percentile_of(double value, std::span<const double> group);

struct BenchmarkTables {
  std::vector<SummaryRow> uda_rows;
  std::vector<SummaryRow> sds_rows;
  std::vector<RangeRow> ranges;
  std::vector<LowCountRow> lows;
};

// Builds every table shape for one index over activity-filtered groups.
// Groups without a single non-null value contribute no row.
BenchmarkTables benchmark_tables(const ProfileGroups& groups,
                                 const ClassificationScheme& scheme,
                                 IndexKind kind);

enum class TableFormat { csv, markdown };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& table, TableFormat format);

Table summary_table(std::span<const SummaryRow> rows);
Table range_table(std::span<const RangeRow> rows);
Table low_count_table(std::span<const LowCountRow> rows);

}  // namespace bibench

#endif  // BIBENCH_BENCHSTATS_HPP_
