#include "bibench/disambig.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "bibench/csv.hpp"

namespace bibench {

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = char(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// SDS the researcher belonged to when the publication appeared: latest
// history entry with year <= pub_year, else the earliest one.
const std::string* sds_as_of(const RosterEntry& entry, int pub_year) {
  if (entry.sds_history.empty()) return nullptr;
  const SdsAssignment* latest = nullptr;
  for (const SdsAssignment& a : entry.sds_history) {
    if (a.year <= pub_year) latest = &a;
  }
  if (!latest) latest = &entry.sds_history.front();
  return &latest->sds_code;
}

double field_signal(const RosterEntry& candidate, const PublicationRecord& pub,
                    const ClassificationScheme& scheme) {
  if (!scheme.category_affinity) return 0.5;
  const std::string* sds = sds_as_of(candidate, pub.year);
  if (!sds) return 0.0;
  auto it = scheme.category_affinity->find(pub.category);
  if (it == scheme.category_affinity->end()) return 0.0;
  return it->second.count(*sds) ? 1.0 : 0.0;
}

double combined_score(const DisambigConfig& config, double affiliation,
                      double field, std::size_t n_candidates) {
  double uniqueness = n_candidates > 0 ? 1.0 / double(n_candidates) : 0.0;
  return config.affiliation_weight * affiliation + config.field_weight * field +
         config.uniqueness_weight * uniqueness;
}

}  // namespace

void DisambigConfig::validate() const {
  if (affiliation_weight < 0 || field_weight < 0 || uniqueness_weight < 0) {
    throw std::invalid_argument("disambiguation weights must be nonnegative");
  }
  double sum = affiliation_weight + field_weight + uniqueness_weight;
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("disambiguation weights must sum to 1, got " +
                                format_full(sum));
  }
}

bool initials_compatible(const std::string& mention_initials,
                         const std::string& given_initials) {
  if (mention_initials.empty() || given_initials.empty()) return false;
  if (mention_initials[0] != given_initials[0]) return false;
  std::size_t gi = 1;
  for (std::size_t mi = 1; mi < mention_initials.size(); ++mi) {
    while (gi < given_initials.size() &&
           given_initials[gi] != mention_initials[mi]) {
      ++gi;
    }
    if (gi == given_initials.size()) return false;
    ++gi;
  }
  return true;
}

std::vector<const RosterEntry*> block(const AuthorMention& mention,
                                      std::span<const RosterEntry> roster) {
  std::vector<const RosterEntry*> candidates;
  for (const RosterEntry& e : roster) {
    if (e.surname_norm == mention.surname_norm &&
        initials_compatible(mention.initials, e.given_initials)) {
      candidates.push_back(&e);
    }
  }
  return candidates;
}

std::set<std::string> resolve_institutions(
    std::span<const std::string> addresses,
    std::span<const std::pair<std::string, std::string>> alias_table) {
  std::set<std::string> resolved;
  if (addresses.empty() || alias_table.empty()) return resolved;
  std::vector<std::string> lowered;
  lowered.reserve(addresses.size());
  for (const std::string& a : addresses) lowered.push_back(lower_ascii(a));
  for (const auto& [pattern, institution] : alias_table) {
    std::string needle = lower_ascii(pattern);
    if (needle.empty()) continue;
    for (const std::string& address : lowered) {
      if (address.find(needle) != std::string::npos) {
        resolved.insert(institution);
        break;
      }
    }
  }
  return resolved;
}

double score_match(const AuthorMention& mention, const RosterEntry& candidate,
                   const PublicationRecord& pub,
                   const ClassificationScheme& scheme,
                   const DisambigConfig& config, std::size_t n_candidates) {
  (void)mention;  // blocking already consumed the name signals
  auto resolved = resolve_institutions(pub.addresses, config.alias_table);
  double affiliation = resolved.count(candidate.institution_id) ? 1.0 : 0.0;
  return combined_score(config, affiliation, field_signal(candidate, pub, scheme),
                        n_candidates);
}

AttributionTable attribute(const PublicationCorpus& corpus,
                           std::span<const RosterEntry> roster,
                           const ClassificationScheme& scheme,
                           const DisambigConfig& config) {
  config.validate();

  std::unordered_map<std::string, std::vector<const RosterEntry*>> by_surname;
  for (const RosterEntry& e : roster) {
    by_surname[e.surname_norm].push_back(&e);
  }

  AttributionTable table;
  for (const PublicationRecord& pub : corpus.records) {
    auto resolved = resolve_institutions(pub.addresses, config.alias_table);
    std::unordered_set<std::string> used_in_pub;

    for (const AuthorMention& mention : pub.mentions) {
      std::vector<const RosterEntry*> candidates;
      if (auto it = by_surname.find(mention.surname_norm);
          it != by_surname.end()) {
        for (const RosterEntry* e : it->second) {
          if (initials_compatible(mention.initials, e->given_initials)) {
            candidates.push_back(e);
          }
        }
      }
      if (candidates.empty()) {
        table.residue.push_back({pub.pub_id, mention.position, 0.0});
        continue;
      }

      struct Scored {
        double score;
        const RosterEntry* entry;
      };
      std::vector<Scored> scored;
      scored.reserve(candidates.size());
      for (const RosterEntry* e : candidates) {
        double affiliation = resolved.count(e->institution_id) ? 1.0 : 0.0;
        scored.push_back({combined_score(config, affiliation,
                                         field_signal(*e, pub, scheme),
                                         candidates.size()),
                          e});
      }
      std::sort(scored.begin(), scored.end(),
                [](const Scored& a, const Scored& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.entry->researcher_id < b.entry->researcher_id;
                });

      const Scored* chosen = nullptr;
      for (const Scored& s : scored) {
        if (s.score < config.threshold) break;
        if (used_in_pub.count(s.entry->researcher_id)) continue;
        chosen = &s;
        break;
      }
      if (chosen) {
        used_in_pub.insert(chosen->entry->researcher_id);
        table.links.push_back({pub.pub_id, mention.position,
                               chosen->entry->researcher_id, chosen->score});
      } else {
        table.residue.push_back(
            {pub.pub_id, mention.position, scored.front().score});
      }
    }
  }

  auto canonical = [](const auto& a, const auto& b) {
    if (a.pub_id != b.pub_id) return a.pub_id < b.pub_id;
    return a.mention_position < b.mention_position;
  };
  std::sort(table.links.begin(), table.links.end(), canonical);
  std::sort(table.residue.begin(), table.residue.end(), canonical);
  return table;
}

EvalReport eval_from_counts(long tp, long fp, long fn) {
  EvalReport r;
  r.true_positive = tp;
  r.false_positive = fp;
  r.false_negative = fn;
  r.precision = (tp + fp) > 0 ? double(tp) / double(tp + fp) : 0.0;
  r.recall = (tp + fn) > 0 ? double(tp) / double(tp + fn) : 0.0;
  double pr = r.precision + r.recall;
  r.f_measure = pr > 0 ? 2.0 * r.precision * r.recall / pr : 0.0;
  return r;
}

EvalReport evaluate(std::span<const Attribution> links,
                    std::span<const GoldLabel> gold) {
  std::map<std::pair<std::string, int>, std::string> truth;
  for (const GoldLabel& g : gold) {
    truth[{g.pub_id, g.mention_position}] = g.researcher_id;
  }
  long tp = 0, fp = 0;
  for (const Attribution& link : links) {
    auto it = truth.find({link.pub_id, link.mention_position});
    if (it != truth.end() && it->second == link.researcher_id) {
      ++tp;
    } else {
      ++fp;
    }
  }
  long fn = static_cast<long>(gold.size()) - tp;
  return eval_from_counts(tp, fp, fn);
}

namespace {

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

int to_int(const std::string& s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line,
                     std::string("invalid integer for ") + what + ": '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<GoldLabel> parse_gold(std::istream& in) {
  std::vector<GoldLabel> gold;
  std::string line;
  if (!read_line(in, line)) return gold;
  if (line != "pub_id,mention_position,researcher_id") {
    throw ParseError(1,
                     "expected gold header 'pub_id,mention_position,researcher_id'");
  }
  std::set<std::pair<std::string, int>> seen;
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected 3 fields, got " +
                                   std::to_string(fields.size()));
    }
    GoldLabel g{fields[0], to_int(fields[1], lineno, "mention_position"),
                fields[2]};
    if (!seen.insert({g.pub_id, g.mention_position}).second) {
      throw ParseError(lineno, "duplicate gold label for (" + g.pub_id + ", " +
                                   fields[1] + ")");
    }
    gold.push_back(std::move(g));
  }
  return gold;
}

void write_gold(std::ostream& out, std::span<const GoldLabel> gold) {
  out << "pub_id,mention_position,researcher_id\n";
  for (const GoldLabel& g : gold) {
    std::vector<std::string> fields = {g.pub_id,
                                       std::to_string(g.mention_position),
                                       g.researcher_id};
    out << join_csv(fields) << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> parse_aliases(
    std::istream& in) {
  std::vector<std::pair<std::string, std::string>> aliases;
  std::string line;
  if (!read_line(in, line)) return aliases;
  if (line != "pattern,institution_id") {
    throw ParseError(1, "expected alias header 'pattern,institution_id'");
  }
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw ParseError(lineno, "expected 2 fields, got " +
                                   std::to_string(fields.size()));
    }
    aliases.emplace_back(fields[0], fields[1]);
  }
  return aliases;
}

void write_aliases(
    std::ostream& out,
    std::span<const std::pair<std::string, std::string>> aliases) {
  out << "pattern,institution_id\n";
  for (const auto& [pattern, institution] : aliases) {
    std::vector<std::string> fields = {pattern, institution};
    out << join_csv(fields) << '\n';
  }
}

void write_attributions(std::ostream& out, std::span<const Attribution> links) {
  out << "pub_id,mention_position,researcher_id,score\n";
  for (const Attribution& a : links) {
    std::vector<std::string> fields = {a.pub_id,
                                       std::to_string(a.mention_position),
                                       a.researcher_id,
                                       format_fixed(a.score, 4)};
    out << join_csv(fields) << '\n';
  }
}

std::vector<Attribution> parse_attributions(std::istream& in) {
  std::vector<Attribution> links;
  std::string line;
  if (!read_line(in, line)) return links;
  if (line != "pub_id,mention_position,researcher_id,score") {
    throw ParseError(
        1, "expected attribution header 'pub_id,mention_position,researcher_id,score'");
  }
  std::set<std::pair<std::string, int>> seen;
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw ParseError(lineno, "expected 4 fields, got " +
                                   std::to_string(fields.size()));
    }
    Attribution a;
    a.pub_id = fields[0];
    a.mention_position = to_int(fields[1], lineno, "mention_position");
    a.researcher_id = fields[2];
    a.score = std::stod(fields[3]);
    if (!seen.insert({a.pub_id, a.mention_position}).second) {
      throw ParseError(lineno, "duplicate attribution for (" + a.pub_id + ", " +
                                   fields[1] + ")");
    }
    links.push_back(std::move(a));
  }
  return links;
}

void write_residue(std::ostream& out, std::span<const Residue> residue) {
  out << "pub_id,mention_position,best_score\n";
  for (const Residue& r : residue) {
    std::vector<std::string> fields = {r.pub_id,
                                       std::to_string(r.mention_position),
                                       format_fixed(r.best_score, 4)};
    out << join_csv(fields) << '\n';
  }
}

}  // namespace bibench
