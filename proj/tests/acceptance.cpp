// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bibench/benchstats.hpp"
#include "bibench/corpus.hpp"
#include "bibench/disambig.hpp"
#include "bibench/indices.hpp"
#include "bibench/rng.hpp"
#include "bibench/synthgen.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bibench;

namespace {

void expect(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

std::vector<long> random_counts(Rng& rng, long max_n, long max_count) {
  std::vector<long> counts(static_cast<std::size_t>(rng.uniform_int(0, max_n)));
  for (long& c : counts) c = rng.uniform_int(0, max_count);
  return counts;
}

// --- criterion 1: published-table consistency fixtures ---------------------

void criterion_table_consistency() {
  std::map<std::string, std::vector<SummaryRow>> h_rows = {{"02", physics_h_rows()}};
  auto h_ranges = range_rows(h_rows);
  expect(h_ranges.size() == 1, "expected one h range row");
  expect(h_ranges[0].median_min == 3.0 && h_ranges[0].median_max == 6.0 &&
             h_ranges[0].max_min == 10.0 && h_ranges[0].max_max == 25.0,
         "h ranges differ from (3, 6, 10, 25)");
  auto h_lows = low_counts(h_rows);
  expect(h_lows.size() == 1 && h_lows[0].n_sds == 7 &&
             h_lows[0].n_q1_eq_1 == 0 && h_lows[0].n_median_le_2 == 0,
         "h low counts differ from (7, 0, 0)");

  std::map<std::string, std::vector<SummaryRow>> g_rows = {{"02", physics_g_rows()}};
  auto g_ranges = range_rows(g_rows);
  expect(g_ranges.size() == 1 && g_ranges[0].median_min == 4.0 &&
             g_ranges[0].median_max == 9.0 && g_ranges[0].max_min == 17.0 &&
             g_ranges[0].max_max == 43.0,
         "g ranges differ from (4, 9, 17, 43)");
  auto g_lows = low_counts(g_rows);
  expect(g_lows.size() == 1 && g_lows[0].n_sds == 7 &&
             g_lows[0].n_q1_eq_1 == 0 && g_lows[0].n_median_le_2 == 0,
         "g low counts differ from (7, 0, 0)");
}

// --- criterion 2: exhaustive index oracles ---------------------------------

void criterion_index_oracles() {
  Rng rng(2010);
  for (int i = 0; i < 1000; ++i) {
    auto counts = random_counts(rng, 50, 1000);
    long h = h_index(counts);
    long g = g_index(counts);
    expect(h == oracle_h(counts),
           "h_index disagrees with brute force on list " + std::to_string(i));
    expect(g == oracle_g(counts, true),
           "g_index disagrees with brute force on list " + std::to_string(i));
  }
}

// --- criterion 3: variant reductions ----------------------------------------

void criterion_variant_reductions() {
  Rng rng(2011);
  FieldBaseline unit;
  for (int year = 1999; year <= 2008; ++year) {
    unit.c0[{"cell", year}] = 1.0;
  }
  for (int i = 0; i < 1000; ++i) {
    std::vector<PaperStat> papers;
    long n = rng.uniform_int(0, 30);
    for (long k = 0; k < n; ++k) {
      papers.push_back(PaperStat{"P" + std::to_string(k),
                                 rng.uniform_int(0, 200), 1, "cell",
                                 static_cast<int>(rng.uniform_int(1999, 2008))});
    }
    std::vector<long> counts;
    for (const auto& p : papers) counts.push_back(p.citations);
    long h = h_index(counts);
    expect(hm_index(papers) == static_cast<double>(h),
           "h_m != h on a single-author set");
    expect(individual_h(papers) == static_cast<double>(h),
           "h_I != h on a single-author set");
    expect(generalized_h(papers, unit) == h,
           "h_f != h with all baselines at 1");
  }
}

// --- criterion 4: Egghe dominance -------------------------------------------

void criterion_egghe_dominance() {
  Rng rng(2012);
  std::vector<std::vector<long>> lists = {{}, {0}, {0, 0, 0, 0}, {1}, {314}};
  while (lists.size() < 10000) lists.push_back(random_counts(rng, 40, 500));
  for (const auto& counts : lists) {
    expect(g_index(counts) >= h_index(counts), "g < h");
  }
}

// --- criteria 5, 6, 8: synthetic-corpus pipeline ----------------------------

struct PipelineResult {
  std::size_t eligible = 0;
  ExclusionReport exclusions;
  long sds_n_sum = 0;
  std::size_t groups_before = 0;
  std::size_t groups_after = 0;
  std::string benchmark_h_csv;
  std::string benchmark_g_csv;
};

PipelineResult run_pipeline(std::uint64_t seed, long researchers, int n_sds) {
  SynthConfig config = default_synth_config(seed, researchers, 0.12, n_sds);
  SynthCorpus synth = generate(config);

  PublicationCorpus corpus;
  corpus.records = synth.publications;
  corpus.rebuild_index();

  DisambigConfig dconfig;
  dconfig.alias_table = synth.aliases;
  AttributionTable table = attribute(corpus, synth.roster, synth.scheme, dconfig);

  auto eligible = eligible_researchers(synth.roster, config.window);
  ProfileRun run =
      profile_all(eligible, table, corpus, synth.scheme, config.window,
                  &synth.baselines, GConvention::padded_zeros);
  expect(run.warnings.empty(), "unexpected h_f warnings on synthetic data");

  PipelineResult result;
  result.eligible = eligible.size();
  result.exclusions = exclusion_report(run.profiles);

  auto all_groups = group_by_sds(run.profiles);
  auto groups = activity_filter(all_groups);
  result.groups_before = all_groups.size();
  result.groups_after = groups.size();

  BenchmarkTables h_tables = benchmark_tables(groups, synth.scheme, IndexKind::h);
  for (const SummaryRow& row : h_tables.sds_rows) result.sds_n_sum += row.n;
  result.benchmark_h_csv =
      render_table(summary_table(h_tables.sds_rows), TableFormat::csv);
  BenchmarkTables g_tables = benchmark_tables(groups, synth.scheme, IndexKind::g);
  result.benchmark_g_csv =
      render_table(summary_table(g_tables.sds_rows), TableFormat::csv);
  return result;
}

void criterion_exclusion_identity() {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    PipelineResult r = run_pipeline(seed, 1200, 12);
    expect(r.exclusions.excluded_total ==
               r.exclusions.zero_publications + r.exclusions.zero_citations,
           "exclusion identity violated (seed " + std::to_string(seed) + ")");
    expect(r.groups_before == r.groups_after,
           "activity filter dropped an SDS unexpectedly (seed " +
               std::to_string(seed) + ")");
    long expected = static_cast<long>(r.eligible) - r.exclusions.excluded_total;
    expect(r.sds_n_sum == expected,
           "per-SDS n values sum to " + std::to_string(r.sds_n_sum) +
               ", expected eligible - excluded = " + std::to_string(expected) +
               " (seed " + std::to_string(seed) + ")");
  }
}

void criterion_disambiguation_quality(double* f_out) {
  SynthConfig config = default_synth_config(42, 10000, 0.12, 0);
  SynthCorpus synth = generate(config);

  CensusReport census = corpus_census(synth.publications, synth.roster);
  expect(std::fabs(census.homonym_fraction - 0.12) <= 0.01,
         "homonym fraction off target");

  PublicationCorpus corpus;
  corpus.records = synth.publications;
  corpus.rebuild_index();

  DisambigConfig dconfig;  // default threshold and weights
  dconfig.alias_table = synth.aliases;
  AttributionTable table = attribute(corpus, synth.roster, synth.scheme, dconfig);
  EvalReport report = evaluate(table.links, synth.gold);
  *f_out = report.f_measure;
  expect(report.f_measure >= 0.90,
         "F-measure " + std::to_string(report.f_measure) + " below 0.90");
}

// --- criterion 7: summarize conventions -------------------------------------

void criterion_summarize() {
  SummaryRow row = summarize(std::vector<double>{1, 2, 3, 4, 5});
  expect(row.q1 == 2.0 && row.median == 3.0 && row.q3 == 4.0 && row.max == 5.0 &&
             row.mean == 3.0 && row.variance == 2.5,
         "summarize([1..5]) differs from (2, 3, 4, 5, 3, 2.5)");

  Rng rng(2013);
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> values(static_cast<std::size_t>(rng.uniform_int(1, 40)));
    for (double& v : values) v = static_cast<double>(rng.uniform_int(0, 60));
    SummaryRow r = summarize(values);
    expect(r.q1 <= r.median && r.median <= r.q3 && r.q3 <= r.max,
           "quartile ordering violated");
  }
}

// --- criterion 8: determinism ------------------------------------------------

void criterion_determinism() {
  SynthConfig config = default_synth_config(99, 800, 0.12, 10);
  auto serialize = [](const SynthCorpus& corpus) {
    std::ostringstream out;
    write_publications(out, corpus.publications);
    write_roster(out, corpus.roster);
    write_scheme(out, corpus.scheme);
    write_affinity(out, corpus.scheme);
    write_gold(out, corpus.gold);
    write_baselines(out, corpus.baselines);
    write_aliases(out, corpus.aliases);
    return out.str();
  };
  expect(serialize(generate(config)) == serialize(generate(config)),
         "synth output differs between two runs with the same seed");

  PipelineResult a = run_pipeline(99, 800, 10);
  PipelineResult b = run_pipeline(99, 800, 10);
  expect(a.benchmark_h_csv == b.benchmark_h_csv &&
             a.benchmark_g_csv == b.benchmark_g_csv,
         "benchmark tables differ between two identical pipeline runs");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(std::string&)> body;
  long budget_ms;  // 0 = no budget
};

}  // namespace

int main() {
  double f_measure = 0.0;
  std::vector<Criterion> criteria = {
      {1, "table-consistency fixtures (Tables 5-8, Physics rows)",
       [](std::string&) { criterion_table_consistency(); }, 1000},
      {2, "h/g oracle equivalence on 1000 random lists",
       [](std::string&) { criterion_index_oracles(); }, 5000},
      {3, "variant reductions (h_m = h_I = h_f = h)",
       [](std::string&) { criterion_variant_reductions(); }, 0},
      {4, "Egghe dominance g >= h on 10000 lists",
       [](std::string&) { criterion_egghe_dominance(); }, 0},
      {5, "exclusion identity and per-SDS accounting",
       [](std::string&) { criterion_exclusion_identity(); }, 0},
      {6, "disambiguation F-measure >= 0.90 at 10k researchers",
       [&f_measure](std::string& note) {
         criterion_disambiguation_quality(&f_measure);
         char buf[32];
         std::snprintf(buf, sizeof(buf), "F = %.4f", f_measure);
         note = buf;
       },
       60000},
      {7, "summarize reference values and quartile ordering",
       [](std::string&) { criterion_summarize(); }, 0},
      {8, "byte-identical reruns (synth and full pipeline)",
       [](std::string&) { criterion_determinism(); }, 0},
  };

  int failures = 0;
  for (Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    std::string error;
    try {
      c.body(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (error.empty() && c.budget_ms > 0 && elapsed > c.budget_ms) {
      error = "runtime " + std::to_string(elapsed) + " ms exceeds budget " +
              std::to_string(c.budget_ms) + " ms";
    }
    if (error.empty()) {
      std::printf("PASS  %d  %s (%ld ms%s%s)\n", c.id, c.name, elapsed,
                  note.empty() ? "" : ", ", note.c_str());
    } else {
      ++failures;
      std::printf("FAIL  %d  %s: %s\n", c.id, c.name, error.c_str());
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures;
}
