#include "bibench/benchstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bibench/csv.hpp"

namespace bibench {

ProfileGroups group_by_sds(std::span<const ResearcherProfile> profiles) {
  ProfileGroups groups;
  for (const ResearcherProfile& p : profiles) {
    groups[p.sds_code].push_back(p);
  }
  return groups;
}

ProfileGroups activity_filter(const ProfileGroups& groups) {
  ProfileGroups kept;
  for (const auto& [sds, profiles] : groups) {
    if (profiles.empty()) continue;
    std::size_t active = 0;
    for (const ResearcherProfile& p : profiles) {
      if (p.status != ProfileStatus::zero_publications) ++active;
    }
    if (2 * active >= profiles.size()) kept.emplace(sds, profiles);
  }
  return kept;
}

ExclusionReport exclusion_report(std::span<const ResearcherProfile> profiles) {
  ExclusionReport report;
  for (const ResearcherProfile& p : profiles) {
    if (p.status == ProfileStatus::zero_publications) {
      ++report.zero_publications;
    } else if (p.status == ProfileStatus::zero_citations) {
      ++report.zero_citations;
    }
  }
  report.excluded_total = report.zero_publications + report.zero_citations;
  return report;
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  double idx = p * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = idx - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

SummaryRow summarize(std::span<const double> values, std::string group_code) {
  if (values.empty()) {
    throw std::invalid_argument("summarize: empty value list");
  }
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());

  SummaryRow row;
  row.group_code = std::move(group_code);
  row.n = static_cast<long>(v.size());
  row.q1 = interpolated_quantile(v, 0.25);
  row.median = interpolated_quantile(v, 0.5);
  row.q3 = interpolated_quantile(v, 0.75);
  row.max = v.back();

  double sum = 0.0;
  for (double x : v) sum += x;
  row.mean = sum / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) {
      double d = x - row.mean;
      ss += d * d;
    }
    row.variance = ss / static_cast<double>(v.size() - 1);
  }
  return row;
}

std::vector<RangeRow> range_rows(
    const std::map<std::string, std::vector<SummaryRow>>& sds_rows_by_uda) {
  std::vector<RangeRow> out;
  for (const auto& [uda, rows] : sds_rows_by_uda) {
    if (rows.empty()) continue;
    RangeRow r;
    r.uda_code = uda;
    r.median_min = r.median_max = rows.front().median;
    r.max_min = r.max_max = rows.front().max;
    for (const SummaryRow& row : rows) {
      r.median_min = std::min(r.median_min, row.median);
      r.median_max = std::max(r.median_max, row.median);
      r.max_min = std::min(r.max_min, row.max);
      r.max_max = std::max(r.max_max, row.max);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LowCountRow> low_counts(
    const std::map<std::string, std::vector<SummaryRow>>& sds_rows_by_uda) {
  std::vector<LowCountRow> out;
  for (const auto& [uda, rows] : sds_rows_by_uda) {
    LowCountRow r;
    r.uda_code = uda;
    r.n_sds = static_cast<long>(rows.size());
    for (const SummaryRow& row : rows) {
      if (row.q1 == 1.0) ++r.n_q1_eq_1;
      if (row.median <= 2.0) ++r.n_median_le_2;
    }
    out.push_back(std::move(r));
  }
  return out;
}

double percentile_of(double value, std::span<const double> group) {
  if (group.empty()) {
    throw std::invalid_argument("percentile_of: empty group");
  }
  long below = 0, equal = 0;
  for (double x : group) {
    if (x < value) ++below;
    if (x == value) ++equal;
  }
  return 100.0 * (static_cast<double>(below) + 0.5 * static_cast<double>(equal)) /
         static_cast<double>(group.size());
}

BenchmarkTables benchmark_tables(const ProfileGroups& groups,
                                 const ClassificationScheme& scheme,
                                 IndexKind kind) {
  BenchmarkTables tables;
  std::map<std::string, std::vector<SummaryRow>> sds_rows_by_uda;
  std::map<std::string, std::vector<double>> uda_values;

  for (const auto& [sds, profiles] : groups) {
    std::vector<double> values;
    for (const ResearcherProfile& p : profiles) {
      if (auto v = index_value(p, kind)) values.push_back(*v);
    }
    if (values.empty()) continue;
    SummaryRow row = summarize(values, sds);
    std::string uda = scheme.uda_of(sds);
    sds_rows_by_uda[uda].push_back(row);
    tables.sds_rows.push_back(std::move(row));
    auto& pooled = uda_values[uda];
    pooled.insert(pooled.end(), values.begin(), values.end());
  }

  for (const auto& [uda, values] : uda_values) {
    tables.uda_rows.push_back(summarize(values, uda));
  }
  tables.ranges = range_rows(sds_rows_by_uda);
  tables.lows = low_counts(sds_rows_by_uda);
  return tables;
}

std::string render_table(const Table& table, TableFormat format) {
  std::string out;
  if (format == TableFormat::csv) {
    out += join_csv(table.header);
    out += '\n';
    for (const auto& row : table.rows) {
      out += join_csv(row);
      out += '\n';
    }
    return out;
  }
  auto md_row = [](std::span<const std::string> cells) {
    std::string line = "|";
    for (const std::string& c : cells) {
      line += ' ';
      line += c;
      line += " |";
    }
    return line + "\n";
  };
  out += md_row(table.header);
  std::string sep = "|";
  for (std::size_t i = 0; i < table.header.size(); ++i) sep += " --- |";
  out += sep + "\n";
  for (const auto& row : table.rows) out += md_row(row);
  return out;
}

Table summary_table(std::span<const SummaryRow> rows) {
  Table t;
  t.header = {"code", "n", "q1", "median", "q3", "max", "mean", "variance"};
  for (const SummaryRow& r : rows) {
    t.rows.push_back({r.group_code, std::to_string(r.n), format_stat(r.q1),
                      format_stat(r.median), format_stat(r.q3),
                      format_stat(r.max), format_fixed(r.mean, 2),
                      format_fixed(r.variance, 2)});
  }
  return t;
}

Table range_table(std::span<const RangeRow> rows) {
  Table t;
  t.header = {"uda", "median_min", "median_max", "max_min", "max_max"};
  for (const RangeRow& r : rows) {
    t.rows.push_back({r.uda_code, format_stat(r.median_min),
                      format_stat(r.median_max), format_stat(r.max_min),
                      format_stat(r.max_max)});
  }
  return t;
}

Table low_count_table(std::span<const LowCountRow> rows) {
  Table t;
  t.header = {"uda", "n_sds", "n_q1_eq_1", "n_median_le_2"};
  for (const LowCountRow& r : rows) {
    t.rows.push_back({r.uda_code, std::to_string(r.n_sds),
                      std::to_string(r.n_q1_eq_1),
                      std::to_string(r.n_median_le_2)});
  }
  return t;
}

}  // namespace bibench
