#include "bibench/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "bibench/csv.hpp"
#include "bibench/names.hpp"

namespace bibench {

namespace {

using json = nlohmann::ordered_json;

int to_int(std::string_view s, int line, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "invalid integer for " + what + ": '" +
                               std::string(s) + "'");
  }
  return v;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return std::string(s);
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void PublicationCorpus::rebuild_index() {
  by_id.clear();
  by_id.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    by_id.emplace(records[i].pub_id, i);
  }
}

AuthorMention make_mention(std::string raw, int position) {
  NameParts parts = split_author(raw);
  AuthorMention m;
  m.raw = std::move(raw);
  m.surname_norm = normalize_name(parts.surname);
  m.initials = extract_initials(parts.given);
  m.position = position;
  return m;
}

PublicationCorpus parse_publications(std::istream& in) {
  PublicationCorpus corpus;
  std::string line;
  int lineno = 0;
  while (read_line(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(lineno, std::string("malformed record: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(lineno, "record is not an object");

    auto require = [&](const char* field) -> const json& {
      auto it = j.find(field);
      if (it == j.end()) {
        throw ParseError(lineno,
                         std::string("missing required field '") + field + "'");
      }
      return *it;
    };

    PublicationRecord rec;
    const json& id = require("pub_id");
    if (!id.is_string() || id.get<std::string>().empty())
      throw ParseError(lineno, "pub_id must be a nonempty string");
    rec.pub_id = id.get<std::string>();
    if (corpus.by_id.count(rec.pub_id)) {
      throw ParseError(lineno, "duplicate pub_id \"" + rec.pub_id + "\"");
    }

    const json& year = require("year");
    if (!year.is_number_integer())
      throw ParseError(lineno, "year must be an integer");
    rec.year = year.get<int>();
    if (rec.year < 1900 || rec.year > 2100)
      throw ParseError(lineno, "year " + std::to_string(rec.year) +
                                   " outside [1900, 2100]");

    const json& authors = require("authors");
    if (!authors.is_array() || authors.empty())
      throw ParseError(lineno, "authors must be a nonempty array");
    int position = 0;
    for (const json& a : authors) {
      if (!a.is_string())
        throw ParseError(lineno, "authors entries must be strings");
      AuthorMention m = make_mention(a.get<std::string>(), position++);
      if (m.surname_norm.empty())
        throw ParseError(lineno, "author '" + m.raw + "' has no surname");
      if (m.initials.empty())
        throw ParseError(lineno, "author '" + m.raw + "' has no initials");
      rec.mentions.push_back(std::move(m));
    }

    const json& addresses = require("addresses");
    if (!addresses.is_array())
      throw ParseError(lineno, "addresses must be an array");
    for (const json& a : addresses) {
      if (!a.is_string())
        throw ParseError(lineno, "addresses entries must be strings");
      rec.addresses.push_back(a.get<std::string>());
    }

    const json& category = require("category");
    if (!category.is_string())
      throw ParseError(lineno, "category must be a string");
    rec.category = category.get<std::string>();

    if (auto it = j.find("citation_dates"); it != j.end()) {
      if (!it->is_array())
        throw ParseError(lineno, "citation_dates must be an array");
      std::vector<Date> events;
      for (const json& d : *it) {
        if (!d.is_string())
          throw ParseError(lineno, "citation_dates entries must be strings");
        auto date = parse_date(d.get<std::string>());
        if (!date) {
          throw ParseError(lineno, "invalid citation date '" +
                                       d.get<std::string>() + "'");
        }
        events.push_back(*date);
      }
      std::sort(events.begin(), events.end());
      rec.citation_events = std::move(events);
    }
    if (auto it = j.find("citation_count"); it != j.end()) {
      if (!it->is_number_integer() || it->get<long>() < 0)
        throw ParseError(lineno, "citation_count must be a nonnegative integer");
      rec.citation_snapshot = it->get<long>();
      if (rec.citation_events) {
        corpus.warnings.push_back(
            {lineno, "pub_id \"" + rec.pub_id +
                         "\": citation_count present alongside citation_dates; "
                         "dated events take precedence"});
      }
    }

    corpus.by_id.emplace(rec.pub_id, corpus.records.size());
    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

void write_publications(std::ostream& out,
                        std::span<const PublicationRecord> records) {
  for (const PublicationRecord& rec : records) {
    json j;
    j["pub_id"] = rec.pub_id;
    j["year"] = rec.year;
    json authors = json::array();
    for (const AuthorMention& m : rec.mentions) authors.push_back(m.raw);
    j["authors"] = std::move(authors);
    j["addresses"] = rec.addresses;
    j["category"] = rec.category;
    if (rec.citation_events) {
      json dates = json::array();
      for (const Date& d : *rec.citation_events)
        dates.push_back(format_date(d));
      j["citation_dates"] = std::move(dates);
    }
    if (rec.citation_snapshot) j["citation_count"] = *rec.citation_snapshot;
    out << j.dump() << '\n';
  }
}

namespace {

const char* kRosterHeader =
    "researcher_id,surname,given_names,institution_id,entry_year,exit_year,"
    "sds_history";

std::vector<SdsAssignment> parse_sds_history(std::string_view text, int line) {
  std::vector<SdsAssignment> history;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line, "sds_history entry '" + std::string(item) +
                                 "' is not YEAR:CODE");
    }
    SdsAssignment a;
    a.year = to_int(item.substr(0, colon), line, "sds_history year");
    a.sds_code = trimmed(item.substr(colon + 1));
    if (a.sds_code.empty())
      throw ParseError(line, "sds_history entry has empty code");
    history.push_back(std::move(a));
  }
  std::stable_sort(history.begin(), history.end(),
                   [](const SdsAssignment& a, const SdsAssignment& b) {
                     return a.year < b.year;
                   });
  return history;
}

}  // namespace

std::vector<RosterEntry> parse_roster(std::istream& in) {
  std::vector<RosterEntry> roster;
  std::string line;
  if (!read_line(in, line)) return roster;  // empty file, empty roster
  if (trimmed(line) != kRosterHeader) {
    throw ParseError(1, std::string("expected roster header '") +
                            kRosterHeader + "'");
  }
  std::unordered_set<std::string> seen;
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 7) {
      throw ParseError(lineno, "expected 7 fields, got " +
                                   std::to_string(fields.size()));
    }
    RosterEntry e;
    e.researcher_id = trimmed(fields[0]);
    if (e.researcher_id.empty())
      throw ParseError(lineno, "missing required field 'researcher_id'");
    if (!seen.insert(e.researcher_id).second) {
      throw ParseError(lineno,
                       "duplicate researcher_id \"" + e.researcher_id + "\"");
    }
    e.surname = trimmed(fields[1]);
    if (e.surname.empty())
      throw ParseError(lineno, "missing required field 'surname'");
    e.given_names = trimmed(fields[2]);
    e.surname_norm = normalize_name(e.surname);
    e.given_initials = extract_initials(e.given_names);
    e.institution_id = trimmed(fields[3]);
    std::string entry = trimmed(fields[4]);
    if (entry.empty())
      throw ParseError(lineno, "missing required field 'entry_year'");
    e.entry_year = to_int(entry, lineno, "entry_year");
    std::string exit = trimmed(fields[5]);
    if (!exit.empty()) {
      e.exit_year = to_int(exit, lineno, "exit_year");
      if (e.entry_year > *e.exit_year) {
        throw ParseError(lineno, "entry_year " + std::to_string(e.entry_year) +
                                     " after exit_year " +
                                     std::to_string(*e.exit_year));
      }
    }
    e.sds_history = parse_sds_history(trimmed(fields[6]), lineno);
    roster.push_back(std::move(e));
  }
  return roster;
}

void write_roster(std::ostream& out, std::span<const RosterEntry> roster) {
  out << kRosterHeader << '\n';
  for (const RosterEntry& e : roster) {
    std::string history;
    for (const SdsAssignment& a : e.sds_history) {
      if (!history.empty()) history += ';';
      history += std::to_string(a.year) + ":" + a.sds_code;
    }
    std::vector<std::string> fields = {
        e.researcher_id,
        e.surname,
        e.given_names,
        e.institution_id,
        std::to_string(e.entry_year),
        e.exit_year ? std::to_string(*e.exit_year) : "",
        history,
    };
    out << join_csv(fields) << '\n';
  }
}

const ClassificationScheme::Sds* ClassificationScheme::find_sds(
    std::string_view code) const {
  for (const Sds& s : sds) {
    if (s.code == code) return &s;
  }
  return nullptr;
}

std::string ClassificationScheme::uda_of(std::string_view sds_code) const {
  const Sds* s = find_sds(sds_code);
  return s ? s->uda_code : std::string();
}

ClassificationScheme parse_scheme(std::istream& in) {
  ClassificationScheme scheme;
  std::string line;
  if (!read_line(in, line)) return scheme;
  if (trimmed(line) != "sds_code,sds_name,uda_code,uda_name") {
    throw ParseError(1,
                     "expected scheme header 'sds_code,sds_name,uda_code,uda_name'");
  }
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw ParseError(lineno, "expected 4 fields, got " +
                                   std::to_string(fields.size()));
    }
    std::string sds_code = trimmed(fields[0]);
    std::string sds_name = trimmed(fields[1]);
    std::string uda_code = trimmed(fields[2]);
    std::string uda_name = trimmed(fields[3]);
    if (sds_code.empty() || uda_code.empty())
      throw ParseError(lineno, "sds_code and uda_code are required");
    if (scheme.find_sds(sds_code))
      throw ParseError(lineno, "duplicate sds_code \"" + sds_code + "\"");
    bool have_uda = false;
    for (const auto& u : scheme.udas) {
      if (u.code == uda_code) {
        have_uda = true;
        if (u.name != uda_name) {
          throw ParseError(lineno, "uda_code \"" + uda_code +
                                       "\" listed with conflicting names");
        }
      }
    }
    if (!have_uda) scheme.udas.push_back({uda_code, uda_name});
    scheme.sds.push_back({sds_code, sds_name, uda_code});
  }
  return scheme;
}

void write_scheme(std::ostream& out, const ClassificationScheme& scheme) {
  out << "sds_code,sds_name,uda_code,uda_name\n";
  for (const auto& s : scheme.sds) {
    std::string uda_name;
    for (const auto& u : scheme.udas) {
      if (u.code == s.uda_code) uda_name = u.name;
    }
    std::vector<std::string> fields = {s.code, s.name, s.uda_code, uda_name};
    out << join_csv(fields) << '\n';
  }
}

void parse_affinity(std::istream& in, ClassificationScheme& scheme) {
  std::map<std::string, std::set<std::string>> affinity;
  std::string line;
  if (!read_line(in, line)) {
    scheme.category_affinity = std::move(affinity);
    return;
  }
  if (trimmed(line) != "category,sds_code") {
    throw ParseError(1, "expected affinity header 'category,sds_code'");
  }
  int lineno = 1;
  while (read_line(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw ParseError(lineno, "expected 2 fields, got " +
                                   std::to_string(fields.size()));
    }
    std::string category = trimmed(fields[0]);
    std::string sds_code = trimmed(fields[1]);
    if (!scheme.find_sds(sds_code)) {
      throw ParseError(lineno, "unknown sds_code \"" + sds_code + "\"");
    }
    affinity[category].insert(sds_code);
  }
  scheme.category_affinity = std::move(affinity);
}

void write_affinity(std::ostream& out, const ClassificationScheme& scheme) {
  out << "category,sds_code\n";
  if (!scheme.category_affinity) return;
  for (const auto& [category, codes] : *scheme.category_affinity) {
    for (const auto& code : codes) {
      std::vector<std::string> fields = {category, code};
      out << join_csv(fields) << '\n';
    }
  }
}

std::vector<RosterEntry> eligible_researchers(
    std::span<const RosterEntry> roster, const WindowConfig& window) {
  std::vector<RosterEntry> kept;
  for (const RosterEntry& e : roster) {
    if (e.entry_year > window.start_year) continue;
    if (e.exit_year && *e.exit_year < window.end_year) continue;
    kept.push_back(e);
  }
  return kept;
}

const std::string& effective_sds(const RosterEntry& entry,
                                 const WindowConfig& window) {
  if (entry.sds_history.empty()) {
    throw std::runtime_error("researcher " + entry.researcher_id +
                             " has an empty sds_history");
  }
  const SdsAssignment* latest = nullptr;
  for (const SdsAssignment& a : entry.sds_history) {
    if (a.year <= window.end_year) latest = &a;
  }
  if (!latest) {
    throw std::runtime_error("researcher " + entry.researcher_id +
                             " has no SDS assignment on or before " +
                             std::to_string(window.end_year));
  }
  return latest->sds_code;
}

long citations_at(const PublicationRecord& pub, const Date& obs) {
  if (pub.citation_events) {
    const auto& events = *pub.citation_events;
    auto it = std::upper_bound(events.begin(), events.end(), obs);
    return static_cast<long>(it - events.begin());
  }
  return pub.citation_snapshot.value_or(0);
}

bool in_window(const PublicationRecord& pub, const WindowConfig& window) {
  return pub.year >= window.start_year && pub.year <= window.end_year;
}

}  // namespace bibench
