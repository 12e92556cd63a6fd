#ifndef BIBENCH_SYNTHGEN_HPP_
#define BIBENCH_SYNTHGEN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bibench/disambig.hpp"
#include "bibench/indices.hpp"
#include "bibench/records.hpp"

namespace bibench {

// One synthetic field: an SDS with its own publication intensity and
// citation distribution, since different sectors publish and get cited at
// very different rates.
struct FieldSpec {
  std::string sds_code;
  std::string sds_name;
  std::string uda_code;
  std::string uda_name;
  std::string category;           // subject category its papers default to
  int n_researchers = 0;
  double pubs_per_researcher = 3.0;  // Poisson mean
  double citation_log_mean = 1.0;    // lognormal location
  double citation_log_sd = 1.0;      // lognormal shape
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::vector<FieldSpec> fields;
  // P(byline has k authors) proportional to coauthor_weights[k-1].
  std::vector<double> coauthor_weights = {0.20, 0.30, 0.30, 0.15, 0.05};
  // Target fraction of researchers sharing a normalized surname with
  // another researcher.
  double homonym_rate = 0.12;
  WindowConfig window{2001, 2005, Date{2008, 3, 31}};

  int n_institutions = 30;
  double address_present_prob = 0.95;
  double foreign_address_prob = 0.10;
  double own_category_prob = 0.85;
  double same_uda_category_prob = 0.10;
  double ineligible_prob = 0.08;     // late entries / early departures
  double sds_change_prob = 0.05;     // SDS change inside the window
  double out_of_window_prob = 0.08;  // publications outside the year window
  double second_initial_prob = 0.5;  // byline carries the middle initial
  double snapshot_prob = 0.04;       // records with only a citation count
};

// Catalog-backed config: n_researchers spread over the first n_sds catalog
// fields (0 = the whole catalog).
SynthConfig default_synth_config(std::uint64_t seed, long n_researchers,
                                 double homonym_rate = 0.12, int n_sds = 0);

struct SynthCorpus {
  std::vector<PublicationRecord> publications;
  std::vector<RosterEntry> roster;
  ClassificationScheme scheme;
  std::vector<GoldLabel> gold;          // one label per mention
  FieldBaseline baselines;              // true per-(category, year) means
  std::vector<std::pair<std::string, std::string>> aliases;
};

// Deterministic for a fixed seed: running twice yields byte-identical
// streams. Throws when the homonym rate cannot be hit within one percentage
// point for the requested population size.
SynthCorpus generate(const SynthConfig& config);

struct CensusReport {
  long publications = 0;
  long researchers = 0;
  long mentions = 0;
  // Fraction of researchers sharing a normalized surname with another.
  double homonym_fraction = 0.0;
};

CensusReport corpus_census(std::span<const PublicationRecord> pubs,
                           std::span<const RosterEntry> roster);

}  // namespace bibench

#endif  // BIBENCH_SYNTHGEN_HPP_
