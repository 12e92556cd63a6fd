#ifndef BIBENCH_RECORDS_HPP_
#define BIBENCH_RECORDS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bibench/dates.hpp"

namespace bibench {

// One author slot in a publication byline. Bibliographic sources report only
// the surname and the first-name initials, so that is all we keep beyond the
// raw string.
struct AuthorMention {
  std::string raw;
  std::string surname_norm;   // normalize_name(surname part)
  std::string initials;       // one uppercase letter per initial, in order
  int position = 0;           // index in the byline
};

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::vector<AuthorMention> mentions;
  std::vector<std::string> addresses;   // raw affiliation strings
  std::string category;                 // subject-category code
  // Dated citation events, sorted ascending. When absent the record carries
  // only a citation_snapshot count, which ignores the observation date.
  std::optional<std::vector<Date>> citation_events;
  std::optional<long> citation_snapshot;
};

struct SdsAssignment {
  int year = 0;
  std::string sds_code;
};

struct RosterEntry {
  std::string researcher_id;
  std::string surname;        // as given in the roster file
  std::string given_names;    // as given in the roster file
  std::string surname_norm;
  std::string given_initials; // initials of given_names, normalized
  std::string institution_id;
  int entry_year = 0;
  std::optional<int> exit_year;          // absent = still in role
  std::vector<SdsAssignment> sds_history; // sorted by year
};

// Two-level field classification: fine-grained disciplinary sectors (SDS)
// grouped into coarse disciplinary areas (UDA), plus an optional map from
// publication subject categories to the sectors they are affine to.
struct ClassificationScheme {
  struct Uda {
    std::string code;
    std::string name;
  };
  struct Sds {
    std::string code;
    std::string name;
    std::string uda_code;
  };
  std::vector<Uda> udas;
  std::vector<Sds> sds;
  std::optional<std::map<std::string, std::set<std::string>>> category_affinity;

  const Sds* find_sds(std::string_view code) const;
  // UDA code of an SDS, or "" when the SDS is unknown.
  std::string uda_of(std::string_view sds_code) const;
};

// Inclusive publication-year range plus the citation observation cutoff.
struct WindowConfig {
  int start_year = 0;
  int end_year = 0;
  Date observation_date;
};

}  // namespace bibench

#endif  // BIBENCH_RECORDS_HPP_
