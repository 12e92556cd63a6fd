// bibench: publication ingestion, author attribution, h/g-style index
// computation and per-field benchmarking, plus a deterministic synthetic
// corpus generator for testing the whole pipeline at desk scale.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bibench/benchstats.hpp"
#include "bibench/corpus.hpp"
#include "bibench/csv.hpp"
#include "bibench/disambig.hpp"
#include "bibench/indices.hpp"
#include "bibench/synthgen.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string out_dir = ".";
  std::string format = "csv";

  bibench::TableFormat table_format() const {
    return format == "markdown" ? bibench::TableFormat::markdown
                                : bibench::TableFormat::csv;
  }
  std::string table_ext() const { return format == "markdown" ? ".md" : ".csv"; }
};

// Artifacts are written to a temp file and renamed into place so an aborted
// run can never leave a partial file that looks like a result.
void write_atomic(const fs::path& path, const std::string& content) {
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

std::pair<int, int> parse_window_years(const std::string& text) {
  auto colon = text.find(':');
  int start = std::stoi(text.substr(0, colon));
  int end = std::stoi(text.substr(colon + 1));
  return {start, end};
}

const CLI::Validator kDateValidator(
    [](std::string& s) -> std::string {
      if (!bibench::parse_date(s)) {
        return "'" + s + "' is not a valid YYYY-MM-DD date";
      }
      return {};
    },
    "DATE");

const CLI::Validator kWindowValidator(
    [](std::string& s) -> std::string {
      auto colon = s.find(':');
      if (colon == std::string::npos) return "'" + s + "' is not START:END";
      try {
        auto [start, end] = parse_window_years(s);
        if (start > end) return "window start after end in '" + s + "'";
        if (start < 1900 || end > 2100) return "window years outside [1900, 2100]";
      } catch (const std::exception&) {
        return "'" + s + "' is not START:END";
      }
      return {};
    },
    "WINDOW");

std::vector<bibench::IndexKind> parse_index_list(const std::string& csv,
                                                 const std::string& flag) {
  std::vector<bibench::IndexKind> kinds;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto kind = bibench::parse_index_kind(token);
    if (!kind) {
      throw CLI::ValidationError(flag, "unknown index '" + token +
                                           "' (expected h, g, hi, hm or hf)");
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw CLI::ValidationError(flag, "no indexes selected");
  return kinds;
}

void print_warnings(const std::vector<bibench::ParseWarning>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: line " << w.line << ": " << w.message << "\n";
  }
}

ordered_json conventions_json() {
  ordered_json j;
  j["quantile_method"] = "linear interpolation at p*(n-1)";
  j["variance"] = "sample variance (n-1 denominator)";
  return j;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOpts {
  std::uint64_t seed = 1;
  long researchers = 2000;
  double homonym_rate = 0.12;
  int sds_count = 0;
  std::string window = "2001:2005";
  std::string obs_date = "2008-03-31";
};

void cmd_synth(const SynthOpts& opts, const GlobalOpts& global) {
  bibench::SynthConfig config = bibench::default_synth_config(
      opts.seed, opts.researchers, opts.homonym_rate, opts.sds_count);
  auto [start, end] = parse_window_years(opts.window);
  config.window.start_year = start;
  config.window.end_year = end;
  config.window.observation_date = *bibench::parse_date(opts.obs_date);

  bibench::SynthCorpus corpus = bibench::generate(config);
  fs::path out(global.out_dir);

  std::ostringstream pubs;
  bibench::write_publications(pubs, corpus.publications);
  write_atomic(out / "publications.jsonl", pubs.str());

  std::ostringstream roster;
  bibench::write_roster(roster, corpus.roster);
  write_atomic(out / "roster.csv", roster.str());

  std::ostringstream scheme;
  bibench::write_scheme(scheme, corpus.scheme);
  write_atomic(out / "scheme.csv", scheme.str());

  std::ostringstream affinity;
  bibench::write_affinity(affinity, corpus.scheme);
  write_atomic(out / "affinity.csv", affinity.str());

  std::ostringstream gold;
  bibench::write_gold(gold, corpus.gold);
  write_atomic(out / "gold.csv", gold.str());

  std::ostringstream baselines;
  bibench::write_baselines(baselines, corpus.baselines);
  write_atomic(out / "baselines.csv", baselines.str());

  std::ostringstream aliases;
  bibench::write_aliases(aliases, corpus.aliases);
  write_atomic(out / "aliases.csv", aliases.str());

  auto census = bibench::corpus_census(corpus.publications, corpus.roster);
  ordered_json meta;
  meta["seed"] = config.seed;
  meta["researchers"] = census.researchers;
  meta["publications"] = census.publications;
  meta["mentions"] = census.mentions;
  meta["homonym_rate_target"] = config.homonym_rate;
  meta["homonym_fraction"] = census.homonym_fraction;
  meta["window"] = opts.window;
  meta["observation_date"] = opts.obs_date;
  meta["sds_count"] = config.fields.size();
  write_atomic(out / "synth_meta.json", meta.dump(2) + "\n");

  std::cout << "generated " << census.publications << " publications for "
            << census.researchers << " researchers ("
            << bibench::format_fixed(census.homonym_fraction * 100, 2)
            << "% homonyms) in " << global.out_dir << "\n";
}

// ---------------------------------------------------------------------------
// ingest

struct IngestOpts {
  std::string pubs, roster, scheme, affinity;
};

void cmd_ingest(const IngestOpts& opts, const GlobalOpts& global) {
  auto pubs_in = open_input(opts.pubs);
  bibench::PublicationCorpus corpus = bibench::parse_publications(pubs_in);
  print_warnings(corpus.warnings);

  auto roster_in = open_input(opts.roster);
  auto roster = bibench::parse_roster(roster_in);

  auto scheme_in = open_input(opts.scheme);
  auto scheme = bibench::parse_scheme(scheme_in);
  if (!opts.affinity.empty()) {
    auto affinity_in = open_input(opts.affinity);
    bibench::parse_affinity(affinity_in, scheme);
  }

  // Unknown subject categories are accepted but flagged.
  long unknown_categories = 0;
  if (scheme.category_affinity) {
    for (const auto& rec : corpus.records) {
      if (!scheme.category_affinity->count(rec.category)) {
        ++unknown_categories;
      }
    }
    if (unknown_categories > 0) {
      std::cerr << "warning: " << unknown_categories
                << " records carry a subject category absent from the affinity map\n";
    }
  }

  fs::path out(global.out_dir);
  auto census = bibench::corpus_census(corpus.records, roster);
  bibench::Table census_table;
  census_table.header = {"publications", "researchers", "mentions",
                         "homonym_fraction"};
  census_table.rows.push_back({std::to_string(census.publications),
                               std::to_string(census.researchers),
                               std::to_string(census.mentions),
                               bibench::format_full(census.homonym_fraction)});
  write_atomic(out / ("census" + global.table_ext()),
               bibench::render_table(census_table, global.table_format()));

  std::ostringstream pubs_out;
  bibench::write_publications(pubs_out, corpus.records);
  write_atomic(out / "publications_normalized.jsonl", pubs_out.str());

  std::ostringstream roster_out;
  bibench::write_roster(roster_out, roster);
  write_atomic(out / "roster_normalized.csv", roster_out.str());

  ordered_json meta;
  meta["publications"] = census.publications;
  meta["researchers"] = census.researchers;
  meta["mentions"] = census.mentions;
  meta["parse_warnings"] = corpus.warnings.size();
  meta["unknown_category_records"] = unknown_categories;
  write_atomic(out / "ingest_meta.json", meta.dump(2) + "\n");

  std::cout << "ingested " << census.publications << " publications, "
            << census.researchers << " researchers\n";
}

// ---------------------------------------------------------------------------
// attribute

struct AttributeOpts {
  std::string pubs, roster, scheme, affinity, aliases, gold;
  double threshold = 0.5;
  std::vector<double> weights = {0.5, 0.3, 0.2};
};

void cmd_attribute(const AttributeOpts& opts, const GlobalOpts& global) {
  if (opts.weights.size() != 3) {
    throw CLI::ValidationError("--weights", "expected three comma-separated values");
  }
  bibench::DisambigConfig config;
  config.threshold = opts.threshold;
  config.affiliation_weight = opts.weights[0];
  config.field_weight = opts.weights[1];
  config.uniqueness_weight = opts.weights[2];
  try {
    config.validate();
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--weights", e.what());
  }

  auto pubs_in = open_input(opts.pubs);
  bibench::PublicationCorpus corpus = bibench::parse_publications(pubs_in);
  print_warnings(corpus.warnings);
  auto roster_in = open_input(opts.roster);
  auto roster = bibench::parse_roster(roster_in);
  auto scheme_in = open_input(opts.scheme);
  auto scheme = bibench::parse_scheme(scheme_in);
  if (!opts.affinity.empty()) {
    auto affinity_in = open_input(opts.affinity);
    bibench::parse_affinity(affinity_in, scheme);
  }
  if (!opts.aliases.empty()) {
    auto aliases_in = open_input(opts.aliases);
    config.alias_table = bibench::parse_aliases(aliases_in);
  }

  bibench::AttributionTable table =
      bibench::attribute(corpus, roster, scheme, config);

  fs::path out(global.out_dir);
  std::ostringstream links;
  bibench::write_attributions(links, table.links);
  write_atomic(out / "attributions.csv", links.str());

  std::ostringstream residue;
  bibench::write_residue(residue, table.residue);
  write_atomic(out / "residue.csv", residue.str());

  ordered_json meta;
  meta["threshold"] = config.threshold;
  meta["weights"] = {config.affiliation_weight, config.field_weight,
                     config.uniqueness_weight};
  meta["alias_patterns"] = config.alias_table.size();
  meta["attributed"] = table.links.size();
  meta["residue"] = table.residue.size();

  if (!opts.gold.empty()) {
    auto gold_in = open_input(opts.gold);
    auto gold = bibench::parse_gold(gold_in);
    bibench::EvalReport report = bibench::evaluate(table.links, gold);
    bibench::Table eval_table;
    eval_table.header = {"true_positive", "false_positive", "false_negative",
                         "precision",     "recall",         "f_measure"};
    eval_table.rows.push_back({std::to_string(report.true_positive),
                               std::to_string(report.false_positive),
                               std::to_string(report.false_negative),
                               bibench::format_fixed(report.precision, 6),
                               bibench::format_fixed(report.recall, 6),
                               bibench::format_fixed(report.f_measure, 6)});
    write_atomic(out / ("evaluation" + global.table_ext()),
                 bibench::render_table(eval_table, global.table_format()));
    meta["f_measure"] = report.f_measure;
    std::cout << "F-measure " << bibench::format_fixed(report.f_measure, 4)
              << " (P " << bibench::format_fixed(report.precision, 4) << ", R "
              << bibench::format_fixed(report.recall, 4) << ")\n";
  }

  write_atomic(out / "attribute_meta.json", meta.dump(2) + "\n");
  std::cout << "attributed " << table.links.size() << " mentions, "
            << table.residue.size() << " left in residue\n";
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOpts {
  std::string pubs, roster, scheme, attributions, baselines;
  std::string window;
  std::string obs_date;
  std::string indices = "h,g,hi,hm,hf";
  std::string g_convention = "padded";
};

void cmd_compute(const ComputeOpts& opts, const GlobalOpts& global) {
  auto selected = parse_index_list(opts.indices, "--indices");

  auto pubs_in = open_input(opts.pubs);
  bibench::PublicationCorpus corpus = bibench::parse_publications(pubs_in);
  print_warnings(corpus.warnings);
  auto roster_in = open_input(opts.roster);
  auto roster = bibench::parse_roster(roster_in);
  auto scheme_in = open_input(opts.scheme);
  auto scheme = bibench::parse_scheme(scheme_in);

  bibench::AttributionTable table;
  auto attr_in = open_input(opts.attributions);
  table.links = bibench::parse_attributions(attr_in);

  bibench::FieldBaseline baselines;
  bool have_baselines = !opts.baselines.empty();
  if (have_baselines) {
    auto baselines_in = open_input(opts.baselines);
    baselines = bibench::parse_baselines(baselines_in);
  }

  auto [start, end] = parse_window_years(opts.window);
  bibench::WindowConfig window{start, end, *bibench::parse_date(opts.obs_date)};

  auto conv = opts.g_convention == "capped"
                  ? bibench::GConvention::capped_at_papers
                  : bibench::GConvention::padded_zeros;

  auto eligible = bibench::eligible_researchers(roster, window);
  bibench::ProfileRun run = bibench::profile_all(
      eligible, table, corpus, scheme, window,
      have_baselines ? &baselines : nullptr, conv);
  for (const std::string& w : run.warnings) std::cerr << "warning: " << w << "\n";

  long snapshot_only = 0;
  for (const auto& rec : corpus.records) {
    if (!rec.citation_events && rec.citation_snapshot) ++snapshot_only;
  }
  if (snapshot_only > 0) {
    std::cerr << "warning: " << snapshot_only
              << " records carry only a citation snapshot; the observation "
                 "date does not apply to them\n";
  }

  fs::path out(global.out_dir);
  std::ostringstream profiles;
  bibench::write_profiles(profiles, run.profiles, selected);
  write_atomic(out / "profiles.csv", profiles.str());

  ordered_json meta = conventions_json();
  meta["window"] = opts.window;
  meta["observation_date"] = opts.obs_date;
  meta["g_convention"] = opts.g_convention;
  meta["indices"] = opts.indices;
  meta["roster_size"] = roster.size();
  meta["eligible"] = eligible.size();
  meta["snapshot_only_records"] = snapshot_only;
  meta["hf_warnings"] = run.warnings.size();
  write_atomic(out / "compute_meta.json", meta.dump(2) + "\n");

  std::cout << "profiled " << eligible.size() << " eligible researchers ("
            << roster.size() - eligible.size() << " outside the window)\n";
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkOpts {
  std::string profiles;
  std::string scheme;
  std::string indices = "h,g";
};

void cmd_benchmark(const BenchmarkOpts& opts, const GlobalOpts& global) {
  auto selected = parse_index_list(opts.indices, "--indices");

  auto profiles_in = open_input(opts.profiles);
  auto profiles = bibench::parse_profiles(profiles_in);
  auto scheme_in = open_input(opts.scheme);
  auto scheme = bibench::parse_scheme(scheme_in);

  fs::path out(global.out_dir);
  auto exclusions = bibench::exclusion_report(profiles);
  bibench::Table excl_table;
  excl_table.header = {"excluded_total", "zero_publications", "zero_citations"};
  excl_table.rows.push_back({std::to_string(exclusions.excluded_total),
                             std::to_string(exclusions.zero_publications),
                             std::to_string(exclusions.zero_citations)});
  write_atomic(out / ("exclusions" + global.table_ext()),
               bibench::render_table(excl_table, global.table_format()));

  auto all_groups = bibench::group_by_sds(profiles);
  auto groups = bibench::activity_filter(all_groups);
  std::vector<std::string> dropped;
  for (const auto& [sds, members] : all_groups) {
    if (!groups.count(sds)) dropped.push_back(sds);
  }
  for (const std::string& sds : dropped) {
    std::cerr << "note: SDS " << sds
              << " dropped by the 50% activity filter\n";
  }

  for (bibench::IndexKind kind : selected) {
    auto tables = bibench::benchmark_tables(groups, scheme, kind);
    if (tables.uda_rows.empty() && tables.sds_rows.empty()) {
      throw std::runtime_error("profiles carry no values for index '" +
                               bibench::to_string(kind) + "'");
    }
    bibench::Table bench;
    bench.header = {"level", "code", "n",    "q1",   "median",
                    "q3",    "max",  "mean", "variance"};
    auto add_rows = [&](const std::vector<bibench::SummaryRow>& rows,
                        const char* level) {
      bibench::Table base = bibench::summary_table(rows);
      for (auto& row : base.rows) {
        std::vector<std::string> cells = {level};
        cells.insert(cells.end(), row.begin(), row.end());
        bench.rows.push_back(std::move(cells));
      }
    };
    add_rows(tables.uda_rows, "UDA");
    add_rows(tables.sds_rows, "SDS");

    std::string suffix = "_" + bibench::to_string(kind) + global.table_ext();
    write_atomic(out / ("benchmark" + suffix),
                 bibench::render_table(bench, global.table_format()));
    write_atomic(out / ("ranges" + suffix),
                 bibench::render_table(bibench::range_table(tables.ranges),
                                       global.table_format()));
    write_atomic(out / ("lowcounts" + suffix),
                 bibench::render_table(bibench::low_count_table(tables.lows),
                                       global.table_format()));
  }

  ordered_json meta = conventions_json();
  meta["indices"] = opts.indices;
  meta["profiles"] = profiles.size();
  meta["excluded_total"] = exclusions.excluded_total;
  meta["zero_publications"] = exclusions.zero_publications;
  meta["zero_citations"] = exclusions.zero_citations;
  meta["sds_groups"] = all_groups.size();
  meta["sds_dropped_by_activity_filter"] = dropped;
  write_atomic(out / "benchmark_meta.json", meta.dump(2) + "\n");

  std::cout << "benchmarked " << groups.size() << " SDS groups ("
            << dropped.size() << " dropped by the activity filter), excluded "
            << exclusions.excluded_total << " null-index researchers\n";
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
  std::string profiles;
  std::string researcher;
  std::string index = "h";
};

void cmd_compare(const CompareOpts& opts, const GlobalOpts& global) {
  auto kind = bibench::parse_index_kind(opts.index);
  if (!kind) {
    throw CLI::ValidationError("--index", "unknown index '" + opts.index + "'");
  }
  auto profiles_in = open_input(opts.profiles);
  auto profiles = bibench::parse_profiles(profiles_in);

  const bibench::ResearcherProfile* target = nullptr;
  for (const auto& p : profiles) {
    if (p.researcher_id == opts.researcher) target = &p;
  }
  if (!target) {
    throw std::runtime_error("researcher '" + opts.researcher +
                             "' not found in " + opts.profiles);
  }
  double value = bibench::index_value(*target, *kind).value_or(0.0);

  bibench::Table table;
  table.header = {"researcher_id", "index", "level", "code",
                  "n",             "value", "percentile"};
  auto add_cohort = [&](const char* level, const std::string& code) {
    std::vector<double> cohort;
    for (const auto& p : profiles) {
      bool same_group = level == std::string("SDS") ? p.sds_code == code
                                                    : p.uda_code == code;
      if (!same_group) continue;
      if (auto v = bibench::index_value(p, *kind)) cohort.push_back(*v);
    }
    if (cohort.empty()) return;
    double pct = bibench::percentile_of(value, cohort);
    table.rows.push_back({opts.researcher, opts.index, level, code,
                          std::to_string(cohort.size()),
                          bibench::format_full(value),
                          bibench::format_fixed(pct, 2)});
  };
  add_cohort("SDS", target->sds_code);
  add_cohort("UDA", target->uda_code);
  if (table.rows.empty()) {
    throw std::runtime_error(
        "no researcher in the group has a non-null value for index '" +
        opts.index + "'");
  }

  std::string rendered = bibench::render_table(table, global.table_format());
  write_atomic(fs::path(global.out_dir) / ("compare" + global.table_ext()),
               rendered);
  std::cout << rendered;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bibliometric index benchmarking toolkit"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--out", global.out_dir, "output directory for artifacts")
      ->capture_default_str();
  app.add_option("--format", global.format, "table output format")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();

  SynthOpts synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "generate a gold-labeled synthetic corpus");
  synth_cmd->fallthrough();
  synth_cmd->add_option("--seed", synth.seed, "random seed")
      ->capture_default_str();
  synth_cmd->add_option("--researchers", synth.researchers, "roster size")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth_cmd->add_option("--homonym-rate", synth.homonym_rate,
                        "target fraction of surname-sharing researchers")
      ->check(CLI::Range(0.0, 0.99))
      ->capture_default_str();
  synth_cmd->add_option("--sds-count", synth.sds_count,
                        "number of catalog fields to use (0 = all)");
  synth_cmd->add_option("--window", synth.window, "publication year window")
      ->check(kWindowValidator)
      ->capture_default_str();
  synth_cmd->add_option("--obs-date", synth.obs_date, "citation observation date")
      ->check(kDateValidator)
      ->capture_default_str();

  IngestOpts ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "parse, validate and normalize input files");
  ingest_cmd->fallthrough();
  ingest_cmd->add_option("--pubs", ingest.pubs, "publications (JSON lines)")
      ->required();
  ingest_cmd->add_option("--roster", ingest.roster, "researcher roster CSV")
      ->required();
  ingest_cmd->add_option("--scheme", ingest.scheme, "classification CSV")
      ->required();
  ingest_cmd->add_option("--affinity", ingest.affinity,
                         "category affinity CSV (optional)");

  AttributeOpts attr;
  CLI::App* attr_cmd = app.add_subcommand(
      "attribute", "attribute publication mentions to roster researchers");
  attr_cmd->fallthrough();
  attr_cmd->add_option("--pubs", attr.pubs, "publications (JSON lines)")->required();
  attr_cmd->add_option("--roster", attr.roster, "researcher roster CSV")->required();
  attr_cmd->add_option("--scheme", attr.scheme, "classification CSV")->required();
  attr_cmd->add_option("--affinity", attr.affinity, "category affinity CSV");
  attr_cmd->add_option("--aliases", attr.aliases, "institution alias CSV");
  attr_cmd->add_option("--gold", attr.gold,
                       "gold labels CSV; enables precision/recall evaluation");
  attr_cmd->add_option("--threshold", attr.threshold, "attribution score threshold")
      ->capture_default_str();
  attr_cmd
      ->add_option("--weights", attr.weights,
                   "affiliation,field,uniqueness weights")
      ->delimiter(',')
      ->expected(3);

  ComputeOpts compute;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "compute per-researcher index profiles");
  compute_cmd->fallthrough();
  compute_cmd->add_option("--pubs", compute.pubs, "publications (JSON lines)")
      ->required();
  compute_cmd->add_option("--roster", compute.roster, "researcher roster CSV")
      ->required();
  compute_cmd->add_option("--scheme", compute.scheme, "classification CSV")
      ->required();
  compute_cmd->add_option("--attributions", compute.attributions,
                          "attributions CSV from `attribute`")
      ->required();
  compute_cmd->add_option("--baselines", compute.baselines,
                          "field baselines CSV; enables the hf index");
  compute_cmd->add_option("--window", compute.window, "publication year window")
      ->required()
      ->check(kWindowValidator);
  compute_cmd->add_option("--obs-date", compute.obs_date,
                          "citation observation date")
      ->required()
      ->check(kDateValidator);
  compute_cmd->add_option("--indices", compute.indices,
                          "indexes to emit (subset of h,g,hi,hm,hf)")
      ->capture_default_str();
  compute_cmd->add_option("--g-convention", compute.g_convention,
                          "whether g may exceed the paper count")
      ->check(CLI::IsMember({"padded", "capped"}))
      ->capture_default_str();

  BenchmarkOpts bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "benchmark", "aggregate profiles into per-field benchmark tables");
  bench_cmd->fallthrough();
  bench_cmd->add_option("--profiles", bench.profiles, "profiles CSV from `compute`")
      ->required();
  bench_cmd->add_option("--scheme", bench.scheme, "classification CSV")->required();
  bench_cmd->add_option("--indices", bench.indices, "indexes to tabulate")
      ->capture_default_str();

  CompareOpts compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "percentile of one researcher within their field");
  compare_cmd->fallthrough();
  compare_cmd
      ->add_option("--profiles", compare.profiles, "profiles CSV from `compute`")
      ->required();
  compare_cmd->add_option("--researcher", compare.researcher, "researcher id")
      ->required();
  compare_cmd->add_option("--index", compare.index, "index to compare on")
      ->capture_default_str();

  synth_cmd->callback([&] { cmd_synth(synth, global); });
  ingest_cmd->callback([&] { cmd_ingest(ingest, global); });
  attr_cmd->callback([&] { cmd_attribute(attr, global); });
  compute_cmd->callback([&] { cmd_compute(compute, global); });
  bench_cmd->callback([&] { cmd_benchmark(bench, global); });
  compare_cmd->callback([&] { cmd_compare(compare, global); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
