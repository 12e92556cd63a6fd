#ifndef BIBENCH_CORPUS_HPP_
#define BIBENCH_CORPUS_HPP_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bibench/records.hpp"

namespace bibench {

// Input-data error with the 1-based line it was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseWarning {
  int line = 0;
  std::string message;
};

// An immutable publication set; safe for shared reads once loaded.
struct PublicationCorpus {
  std::vector<PublicationRecord> records;
  std::vector<ParseWarning> warnings;
  std::unordered_map<std::string, std::size_t> by_id;

  const PublicationRecord* find(const std::string& pub_id) const {
    auto it = by_id.find(pub_id);
    return it == by_id.end() ? nullptr : &records[it->second];
  }
  void rebuild_index();
};

// Builds a mention from a raw byline author string; normalization only,
// no validation (callers reject empty surname/initials).
AuthorMention make_mention(std::string raw, int position);

// Line-delimited records, one JSON object per line with fields
//   pub_id, year, authors, addresses, category,
//   citation_dates (optional), citation_count (optional).
// Throws ParseError on malformed lines, missing fields or duplicate ids.
PublicationCorpus parse_publications(std::istream& in);
void write_publications(std::ostream& out,
                        std::span<const PublicationRecord> records);

// CSV with header
//   researcher_id,surname,given_names,institution_id,entry_year,exit_year,sds_history
// where sds_history is encoded YEAR:CODE;YEAR:CODE and an empty exit_year
// means the researcher is still in role. An empty file is an empty roster.
std::vector<RosterEntry> parse_roster(std::istream& in);
void write_roster(std::ostream& out, std::span<const RosterEntry> roster);

// CSV with header sds_code,sds_name,uda_code,uda_name.
ClassificationScheme parse_scheme(std::istream& in);
void write_scheme(std::ostream& out, const ClassificationScheme& scheme);

// Optional affinity CSV with header category,sds_code; populates
// scheme.category_affinity.
void parse_affinity(std::istream& in, ClassificationScheme& scheme);
void write_affinity(std::ostream& out, const ClassificationScheme& scheme);

// Researchers in role for the whole window: entered no later than the window
// start and did not depart before the window end.
std::vector<RosterEntry> eligible_researchers(std::span<const RosterEntry> roster,
                                              const WindowConfig& window);

// SDS the researcher belonged to at the close of the window: the latest
// history entry with year <= window.end_year. Throws when the history is
// empty or starts after the window end.
const std::string& effective_sds(const RosterEntry& entry,
                                 const WindowConfig& window);

// Citations received up to and including the observation date. Snapshot-only
// records return the snapshot count regardless of the date.
long citations_at(const PublicationRecord& pub, const Date& obs);

bool in_window(const PublicationRecord& pub, const WindowConfig& window);

}  // namespace bibench

#endif  // BIBENCH_CORPUS_HPP_
