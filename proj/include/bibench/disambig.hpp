#ifndef BIBENCH_DISAMBIG_HPP_
#define BIBENCH_DISAMBIG_HPP_

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bibench/corpus.hpp"

namespace bibench {

// One resolved (publication, byline position) -> researcher link.
struct Attribution {
  std::string pub_id;
  int mention_position = 0;
  std::string researcher_id;
  double score = 0.0;
};

// Mention left unattributed, with the best score any candidate reached.
struct Residue {
  std::string pub_id;
  int mention_position = 0;
  double best_score = 0.0;
};

struct AttributionTable {
  std::vector<Attribution> links;    // sorted by (pub_id, mention_position)
  std::vector<Residue> residue;      // same order
};

struct DisambigConfig {
  double threshold = 0.5;
  double affiliation_weight = 0.5;
  double field_weight = 0.3;
  double uniqueness_weight = 0.2;
  // Substring patterns over raw addresses -> institution_id.
  std::vector<std::pair<std::string, std::string>> alias_table;

  // Throws when the weights are negative or do not sum to 1 within 1e-9.
  void validate() const;
};

struct GoldLabel {
  std::string pub_id;
  int mention_position = 0;
  std::string researcher_id;
};

struct EvalReport {
  long true_positive = 0;
  long false_positive = 0;
  long false_negative = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// True when the mention's initials are prefix-compatible with a researcher's
// given-name initials: first initial equal, remaining mention initials an
// in-order subsequence of the rest. Bylines often truncate middle initials,
// so exact equality would be too strict.
bool initials_compatible(const std::string& mention_initials,
                         const std::string& given_initials);

// Candidates sharing the mention's normalized surname with compatible
// initials. Result order follows roster order; emptiness is a valid outcome.
std::vector<const RosterEntry*> block(const AuthorMention& mention,
                                      std::span<const RosterEntry> roster);

// Institution ids any of the addresses map to through the alias table
// (case-insensitive substring match).
std::set<std::string> resolve_institutions(
    std::span<const std::string> addresses,
    std::span<const std::pair<std::string, std::string>> alias_table);

// Weighted sum of three [0,1] signals: affiliation (an address maps to the
// candidate's institution), field affinity (the publication category is
// affine to the candidate's SDS; 0.5 when no affinity map is loaded) and
// uniqueness (1/k over the k blocked candidates).
double score_match(const AuthorMention& mention, const RosterEntry& candidate,
                   const PublicationRecord& pub,
                   const ClassificationScheme& scheme,
                   const DisambigConfig& config, std::size_t n_candidates);

// Attributes every mention to its highest-scoring candidate at or above the
// threshold. Ties break toward the lexicographically smaller researcher_id;
// a researcher takes at most one mention per publication. Output is in
// canonical (pub_id, mention_position) order regardless of input order.
AttributionTable attribute(const PublicationCorpus& corpus,
                           std::span<const RosterEntry> roster,
                           const ClassificationScheme& scheme,
                           const DisambigConfig& config);

EvalReport eval_from_counts(long tp, long fp, long fn);

// Compares links against gold labels. Mentions absent from gold are true
// non-links; an attribution for them counts as a false positive.
EvalReport evaluate(std::span<const Attribution> links,
                    std::span<const GoldLabel> gold);

// CSV with header pub_id,mention_position,researcher_id.
std::vector<GoldLabel> parse_gold(std::istream& in);
void write_gold(std::ostream& out, std::span<const GoldLabel> gold);

std::vector<std::pair<std::string, std::string>> parse_aliases(std::istream& in);
void write_aliases(std::ostream& out,
                   std::span<const std::pair<std::string, std::string>> aliases);

void write_attributions(std::ostream& out, std::span<const Attribution> links);
std::vector<Attribution> parse_attributions(std::istream& in);
void write_residue(std::ostream& out, std::span<const Residue> residue);

}  // namespace bibench

#endif  // BIBENCH_DISAMBIG_HPP_
