#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bibench/benchstats.hpp"
#include "bibench/rng.hpp"
#include "fixtures.hpp"

using namespace bibench;

namespace {

ResearcherProfile profile_with(ProfileStatus status, std::string sds = "FIS/01",
                               double h = 0) {
  ResearcherProfile p;
  p.researcher_id = "R";
  p.sds_code = std::move(sds);
  p.uda_code = "02";
  p.status = status;
  p.h = static_cast<long>(h);
  p.g = static_cast<long>(h);
  p.h_individual = h;
  p.h_m = h;
  return p;
}

}  // namespace

TEST_CASE("summarize reference values") {
  std::vector<double> v{1, 2, 3, 4, 5};
  SummaryRow row = summarize(v, "G");
  CHECK(row.n == 5);
  CHECK(row.q1 == 2.0);
  CHECK(row.median == 3.0);
  CHECK(row.q3 == 4.0);
  CHECK(row.max == 5.0);
  CHECK(row.mean == 3.0);
  CHECK(row.variance == 2.5);

  SummaryRow singleton = summarize(std::vector<double>{7});
  CHECK(singleton.q1 == 7.0);
  CHECK(singleton.median == 7.0);
  CHECK(singleton.q3 == 7.0);
  CHECK(singleton.max == 7.0);
  CHECK(singleton.mean == 7.0);
  CHECK(singleton.variance == 0.0);

  SummaryRow constant = summarize(std::vector<double>{2, 2, 2, 2});
  CHECK(constant.q1 == 2.0);
  CHECK(constant.median == 2.0);
  CHECK(constant.q3 == 2.0);
  CHECK(constant.max == 2.0);
  CHECK(constant.mean == 2.0);
  CHECK(constant.variance == 0.0);

  CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("summarize ordering and scaling properties") {
  Rng rng(81);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> values(static_cast<std::size_t>(rng.uniform_int(1, 60)));
    double min = 1e18;
    for (double& v : values) {
      v = static_cast<double>(rng.uniform_int(0, 40));
      min = std::min(min, v);
    }
    SummaryRow row = summarize(values);
    CHECK(min <= row.q1);
    CHECK(row.q1 <= row.median);
    CHECK(row.median <= row.q3);
    CHECK(row.q3 <= row.max);
    CHECK(row.variance >= 0.0);

    double c = 3.5;
    std::vector<double> scaled = values;
    for (double& v : scaled) v *= c;
    SummaryRow srow = summarize(scaled);
    CHECK(srow.q1 == doctest::Approx(c * row.q1).epsilon(1e-9));
    CHECK(srow.median == doctest::Approx(c * row.median).epsilon(1e-9));
    CHECK(srow.q3 == doctest::Approx(c * row.q3).epsilon(1e-9));
    CHECK(srow.max == doctest::Approx(c * row.max).epsilon(1e-9));
    CHECK(srow.mean == doctest::Approx(c * row.mean).epsilon(1e-9));
    CHECK(srow.variance == doctest::Approx(c * c * row.variance).epsilon(1e-9));
  }
}

TEST_CASE("exclusion_report counts null profiles by cause") {
  std::vector<ResearcherProfile> mixed = {
      profile_with(ProfileStatus::ok, "FIS/01", 3),
      profile_with(ProfileStatus::zero_publications),
      profile_with(ProfileStatus::zero_citations),
      profile_with(ProfileStatus::ok, "FIS/01", 1)};
  ExclusionReport report = exclusion_report(mixed);
  CHECK(report.excluded_total == 2);
  CHECK(report.zero_publications == 1);
  CHECK(report.zero_citations == 1);

  std::vector<ResearcherProfile> fine = {
      profile_with(ProfileStatus::ok, "FIS/01", 3)};
  ExclusionReport clean = exclusion_report(fine);
  CHECK(clean.excluded_total == 0);
  CHECK(clean.zero_publications == 0);
  CHECK(clean.zero_citations == 0);

  // Population with the structure reported for the full national dataset:
  // 27,502 in role, 4,970 without publications, 1,094 without citations.
  std::vector<ResearcherProfile> population;
  population.reserve(27502);
  for (int i = 0; i < 21438; ++i)
    population.push_back(profile_with(ProfileStatus::ok, "FIS/01", 2));
  for (int i = 0; i < 4970; ++i)
    population.push_back(profile_with(ProfileStatus::zero_publications));
  for (int i = 0; i < 1094; ++i)
    population.push_back(profile_with(ProfileStatus::zero_citations));
  ExclusionReport national = exclusion_report(population);
  CHECK(national.excluded_total == 6064);
  CHECK(national.zero_publications == 4970);
  CHECK(national.zero_citations == 1094);
  CHECK(national.excluded_total ==
        national.zero_publications + national.zero_citations);
}

TEST_CASE("activity_filter keeps SDSs with at least half active") {
  ProfileGroups groups;
  for (int i = 0; i < 5; ++i)
    groups["FIS/01"].push_back(profile_with(ProfileStatus::ok, "FIS/01", 2));
  for (int i = 0; i < 5; ++i)
    groups["FIS/01"].push_back(profile_with(ProfileStatus::zero_publications, "FIS/01"));
  for (int i = 0; i < 4; ++i)
    groups["MAT/05"].push_back(profile_with(ProfileStatus::ok, "MAT/05", 1));
  for (int i = 0; i < 6; ++i)
    groups["MAT/05"].push_back(profile_with(ProfileStatus::zero_publications, "MAT/05"));
  groups["BIO/10"] = {};

  ProfileGroups kept = activity_filter(groups);
  CHECK(kept.count("FIS/01") == 1);   // exactly 50% is kept
  CHECK(kept.count("MAT/05") == 0);   // 40% is dropped
  CHECK(kept.count("BIO/10") == 0);   // empty group is dropped
}

TEST_CASE("range_rows and low_counts reproduce the published Physics rows") {
  std::map<std::string, std::vector<SummaryRow>> h_by_uda = {
      {"02", physics_h_rows()}};
  auto h_ranges = range_rows(h_by_uda);
  REQUIRE(h_ranges.size() == 1);
  CHECK(h_ranges[0].uda_code == "02");
  CHECK(h_ranges[0].median_min == 3.0);
  CHECK(h_ranges[0].median_max == 6.0);
  CHECK(h_ranges[0].max_min == 10.0);
  CHECK(h_ranges[0].max_max == 25.0);

  auto h_lows = low_counts(h_by_uda);
  REQUIRE(h_lows.size() == 1);
  CHECK(h_lows[0].n_sds == 7);
  CHECK(h_lows[0].n_q1_eq_1 == 0);
  CHECK(h_lows[0].n_median_le_2 == 0);

  std::map<std::string, std::vector<SummaryRow>> g_by_uda = {
      {"02", physics_g_rows()}};
  auto g_ranges = range_rows(g_by_uda);
  REQUIRE(g_ranges.size() == 1);
  CHECK(g_ranges[0].median_min == 4.0);
  CHECK(g_ranges[0].median_max == 9.0);
  CHECK(g_ranges[0].max_min == 17.0);
  CHECK(g_ranges[0].max_max == 43.0);

  auto g_lows = low_counts(g_by_uda);
  REQUIRE(g_lows.size() == 1);
  CHECK(g_lows[0].n_sds == 7);
  CHECK(g_lows[0].n_q1_eq_1 == 0);
  CHECK(g_lows[0].n_median_le_2 == 0);
}

TEST_CASE("range_rows degenerate single SDS and low_counts counting rule") {
  std::map<std::string, std::vector<SummaryRow>> single = {
      {"01", {{"MAT/05", 10, 1, 2, 3, 13, 2.31, 2.23}}}};
  auto ranges = range_rows(single);
  REQUIRE(ranges.size() == 1);
  CHECK(ranges[0].median_min == 2.0);
  CHECK(ranges[0].median_max == 2.0);
  CHECK(ranges[0].max_min == 13.0);
  CHECK(ranges[0].max_max == 13.0);

  std::map<std::string, std::vector<SummaryRow>> counting = {
      {"01",
       {{"A", 5, 1, 1, 2, 4, 1.5, 1.0},
        {"B", 5, 1, 2, 3, 5, 2.0, 1.0},
        {"C", 5, 2, 3, 4, 6, 3.0, 1.0}}}};
  auto lows = low_counts(counting);
  REQUIRE(lows.size() == 1);
  CHECK(lows[0].n_sds == 3);
  CHECK(lows[0].n_q1_eq_1 == 2);
  CHECK(lows[0].n_median_le_2 == 2);
}

TEST_CASE("percentile_of midrank reference values") {
  std::vector<double> group{1, 2, 3, 4, 5};
  CHECK(percentile_of(3, group) == 50.0);

  std::vector<double> four{1, 2, 3, 4};
  CHECK(percentile_of(10, four) == 100.0);

  std::vector<double> one{7};
  CHECK(percentile_of(7, one) == 50.0);

  CHECK_THROWS_AS(percentile_of(1, std::vector<double>{}),
                  std::invalid_argument);
}

TEST_CASE("percentile_of is monotone and averages to 50") {
  Rng rng(82);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> group(static_cast<std::size_t>(rng.uniform_int(1, 50)));
    for (double& v : group) v = static_cast<double>(rng.uniform_int(0, 20));

    double previous = -1.0;
    for (double value = -1.0; value <= 21.0; value += 1.0) {
      double pct = percentile_of(value, group);
      CHECK(pct >= previous);
      CHECK(pct >= 0.0);
      CHECK(pct <= 100.0);
      previous = pct;
    }

    double sum = 0.0;
    for (double member : group) sum += percentile_of(member, group);
    CHECK(sum / static_cast<double>(group.size()) ==
          doctest::Approx(50.0).epsilon(1e-9));
  }
}

TEST_CASE("benchmark_tables aggregates by SDS and UDA") {
  ClassificationScheme scheme;
  scheme.udas = {{"01", "Mathematics and computer sciences"}, {"02", "Physics"}};
  scheme.sds = {{"MAT/05", "Mathematical analysis", "01"},
                {"FIS/01", "Experimental physics", "02"},
                {"FIS/03", "Physics of matter", "02"}};

  ProfileGroups groups;
  auto add = [&](const std::string& sds, double h) {
    groups[sds].push_back(profile_with(ProfileStatus::ok, sds, h));
  };
  add("FIS/01", 1);
  add("FIS/01", 3);
  add("FIS/03", 5);
  add("MAT/05", 2);
  groups["MAT/05"].push_back(
      profile_with(ProfileStatus::zero_citations, "MAT/05"));

  BenchmarkTables tables = benchmark_tables(groups, scheme, IndexKind::h);
  REQUIRE(tables.sds_rows.size() == 3);
  REQUIRE(tables.uda_rows.size() == 2);

  // Null-index researchers do not count toward n.
  long mat_n = 0;
  for (const auto& row : tables.sds_rows) {
    if (row.group_code == "MAT/05") mat_n = row.n;
  }
  CHECK(mat_n == 1);

  // The physics UDA pools both physics SDSs.
  for (const auto& row : tables.uda_rows) {
    if (row.group_code == "02") {
      CHECK(row.n == 3);
      CHECK(row.max == 5.0);
    }
  }
  REQUIRE(tables.ranges.size() == 2);
  REQUIRE(tables.lows.size() == 2);
}

TEST_CASE("render_table emits CSV and markdown") {
  std::vector<SummaryRow> rows = {{"FIS/01", 745, 2, 4, 6, 22, 4.50, 10.41}};
  Table table = summary_table(rows);
  REQUIRE(table.header.size() == 8);

  std::string csv = render_table(table, TableFormat::csv);
  CHECK(csv ==
        "code,n,q1,median,q3,max,mean,variance\n"
        "FIS/01,745,2,4,6,22,4.50,10.41\n");

  Table empty = summary_table(std::vector<SummaryRow>{});
  CHECK(render_table(empty, TableFormat::csv) ==
        "code,n,q1,median,q3,max,mean,variance\n");

  std::string md = render_table(table, TableFormat::markdown);
  CHECK(md ==
        "| code | n | q1 | median | q3 | max | mean | variance |\n"
        "| --- | --- | --- | --- | --- | --- | --- | --- |\n"
        "| FIS/01 | 745 | 2 | 4 | 6 | 22 | 4.50 | 10.41 |\n");

  // Real-valued statistics keep two decimals; whole values print as integers.
  std::vector<SummaryRow> fractional = {{"X", 4, 1.5, 2, 2.75, 9, 3.141, 0.5}};
  std::string frac_csv = render_table(summary_table(fractional), TableFormat::csv);
  CHECK(frac_csv ==
        "code,n,q1,median,q3,max,mean,variance\n"
        "X,4,1.50,2,2.75,9,3.14,0.50\n");
}
