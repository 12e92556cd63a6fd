#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bibench/corpus.hpp"
#include "bibench/names.hpp"

using namespace bibench;

TEST_CASE("name normalization folds case, diacritics and punctuation") {
  CHECK(normalize_name("D'Angelo") == "DANGELO");
  CHECK(normalize_name("Müller") == "MULLER");
  CHECK(normalize_name("  de la  Torre ") == "DELATORRE");
  CHECK(normalize_name("Sant-Agata") == "SANTAGATA");
  CHECK(normalize_name("Rossì") == "ROSSI");
  CHECK(extract_initials("Maria Anna") == "MA");
  CHECK(extract_initials("M.A.") == "MA");
  CHECK(extract_initials("Édouard") == "E");
  CHECK(extract_initials("") == "");
}

TEST_CASE("split_author handles both byline shapes") {
  auto a = split_author("Rossi, M.A.");
  CHECK(a.surname == "Rossi");
  CHECK(a.given == "M.A.");
  auto b = split_author("De Rossi M");
  CHECK(b.surname == "De Rossi");
  CHECK(b.given == "M");
}

TEST_CASE("parse_publications maps one line to one record") {
  std::istringstream in(
      R"({"pub_id":"P1","year":2003,"authors":["Rossi, M.","Bianchi, L.A."],)"
      R"("addresses":["Dept. of Physics, University of Roma, Roma, Italy"],)"
      R"("category":"physics multidisciplinary",)"
      R"("citation_dates":["2006-01-02","2004-05-30"]})"
      "\n");
  PublicationCorpus corpus = parse_publications(in);
  REQUIRE(corpus.records.size() == 1);
  const PublicationRecord& rec = corpus.records[0];
  CHECK(rec.pub_id == "P1");
  CHECK(rec.year == 2003);
  REQUIRE(rec.mentions.size() == 2);
  CHECK(rec.mentions[0].position == 0);
  CHECK(rec.mentions[0].surname_norm == "ROSSI");
  CHECK(rec.mentions[0].initials == "M");
  CHECK(rec.mentions[1].position == 1);
  CHECK(rec.mentions[1].surname_norm == "BIANCHI");
  CHECK(rec.mentions[1].initials == "LA");
  REQUIRE(rec.citation_events.has_value());
  REQUIRE(rec.citation_events->size() == 2);
  CHECK((*rec.citation_events)[0] < (*rec.citation_events)[1]);  // sorted
}

TEST_CASE("parse_publications validation errors name line and field") {
  std::istringstream missing_year(
      R"({"pub_id":"P1","authors":["Rossi, M."],"addresses":[],"category":"x"})"
      "\n");
  CHECK_THROWS_WITH_AS(parse_publications(missing_year),
                       "line 1: missing required field 'year'", ParseError);

  std::istringstream duplicate(
      R"({"pub_id":"P1","year":2003,"authors":["Rossi, M."],"addresses":[],"category":"x"})"
      "\n"
      R"({"pub_id":"P1","year":2004,"authors":["Verdi, A."],"addresses":[],"category":"x"})"
      "\n");
  CHECK_THROWS_WITH_AS(parse_publications(duplicate),
                       "line 2: duplicate pub_id \"P1\"", ParseError);

  std::istringstream bad_json("{not json\n");
  CHECK_THROWS_AS(parse_publications(bad_json), ParseError);

  std::istringstream bad_year(
      R"({"pub_id":"P1","year":1200,"authors":["Rossi, M."],"addresses":[],"category":"x"})"
      "\n");
  CHECK_THROWS_AS(parse_publications(bad_year), ParseError);
}

TEST_CASE("citation_count alongside citation_dates records a warning") {
  std::istringstream in(
      R"({"pub_id":"P1","year":2003,"authors":["Rossi, M."],"addresses":[],)"
      R"("category":"x","citation_dates":["2006-01-02"],"citation_count":9})"
      "\n");
  PublicationCorpus corpus = parse_publications(in);
  REQUIRE(corpus.warnings.size() == 1);
  // Dated events win over the snapshot.
  CHECK(citations_at(corpus.records[0], Date{2008, 3, 31}) == 1);
}

TEST_CASE("parse_roster sorts histories and validates years") {
  std::istringstream in(
      "researcher_id,surname,given_names,institution_id,entry_year,exit_year,"
      "sds_history\n"
      "R1,Rossi,Maria,UNIV-01,1998,,2004:FIS/01;2001:MAT/05\n");
  auto roster = parse_roster(in);
  REQUIRE(roster.size() == 1);
  REQUIRE(roster[0].sds_history.size() == 2);
  CHECK(roster[0].sds_history[0].year == 2001);
  CHECK(roster[0].sds_history[0].sds_code == "MAT/05");
  CHECK(roster[0].sds_history[1].year == 2004);
  CHECK(roster[0].sds_history[1].sds_code == "FIS/01");
  CHECK_FALSE(roster[0].exit_year.has_value());
  CHECK(roster[0].surname_norm == "ROSSI");
  CHECK(roster[0].given_initials == "M");

  std::istringstream bad(
      "researcher_id,surname,given_names,institution_id,entry_year,exit_year,"
      "sds_history\n"
      "R1,Rossi,Maria,UNIV-01,2006,2004,2001:MAT/05\n");
  CHECK_THROWS_AS(parse_roster(bad), ParseError);

  std::istringstream empty("");
  CHECK(parse_roster(empty).empty());
}

TEST_CASE("eligible_researchers applies the in-role rule") {
  WindowConfig window{2001, 2005, Date{2008, 3, 31}};
  RosterEntry kept;
  kept.researcher_id = "R1";
  kept.entry_year = 2000;
  RosterEntry late;
  late.researcher_id = "R2";
  late.entry_year = 2002;
  RosterEntry gone;
  gone.researcher_id = "R3";
  gone.entry_year = 1995;
  gone.exit_year = 2004;
  std::vector<RosterEntry> roster = {kept, late, gone};

  auto eligible = eligible_researchers(roster, window);
  REQUIRE(eligible.size() == 1);
  CHECK(eligible[0].researcher_id == "R1");

  // Subset and idempotence.
  auto again = eligible_researchers(eligible, window);
  REQUIRE(again.size() == eligible.size());
  CHECK(again[0].researcher_id == eligible[0].researcher_id);
}

TEST_CASE("effective_sds picks the assignment at the close of the window") {
  WindowConfig window{2001, 2005, Date{2008, 3, 31}};
  RosterEntry e;
  e.researcher_id = "R1";
  e.sds_history = {{2001, "MAT/05"}, {2005, "FIS/01"}};
  CHECK(effective_sds(e, window) == "FIS/01");

  RosterEntry single;
  single.researcher_id = "R2";
  single.sds_history = {{2001, "BIO/10"}};
  CHECK(effective_sds(single, window) == "BIO/10");

  RosterEntry future;
  future.researcher_id = "R3";
  future.sds_history = {{2006, "FIS/01"}};
  CHECK_THROWS_AS(effective_sds(future, window), std::runtime_error);

  RosterEntry empty;
  empty.researcher_id = "R4";
  CHECK_THROWS_AS(effective_sds(empty, window), std::runtime_error);
}

TEST_CASE("citations_at applies the inclusive observation cutoff") {
  PublicationRecord rec;
  rec.pub_id = "P1";
  rec.year = 2003;
  rec.citation_events = {{Date{2006, 1, 1}, Date{2009, 1, 1}}};
  CHECK(citations_at(rec, Date{2008, 3, 31}) == 1);
  CHECK(citations_at(rec, Date{2006, 1, 1}) == 1);  // same-day event counts
  CHECK(citations_at(rec, Date{2005, 12, 31}) == 0);

  PublicationRecord snapshot;
  snapshot.citation_snapshot = 7;
  CHECK(citations_at(snapshot, Date{2008, 3, 31}) == 7);

  PublicationRecord nothing;
  CHECK(citations_at(nothing, Date{2008, 3, 31}) == 0);

  // Monotone in the observation date.
  Date dates[] = {{2005, 1, 1}, {2006, 1, 1}, {2007, 6, 15}, {2009, 1, 1},
                  {2012, 1, 1}};
  long previous = -1;
  for (const Date& d : dates) {
    long now = citations_at(rec, d);
    CHECK(now >= previous);
    previous = now;
  }
}

TEST_CASE("in_window is inclusive on both ends") {
  WindowConfig window{2001, 2005, Date{2008, 3, 31}};
  PublicationRecord rec;
  rec.year = 2001;
  CHECK(in_window(rec, window));
  rec.year = 2005;
  CHECK(in_window(rec, window));
  rec.year = 2006;
  CHECK_FALSE(in_window(rec, window));
  rec.year = 2000;
  CHECK_FALSE(in_window(rec, window));
}

TEST_CASE("publication parsing is lossless through a round-trip") {
  std::string input =
      R"({"pub_id":"P1","year":2003,"authors":["D'Angelo, C.A.","Müller, K."],)"
      R"("addresses":["Univ. Roma, Roma, Italy"],"category":"physics applied",)"
      R"("citation_dates":["2004-05-30","2006-01-02"]})"
      "\n"
      R"({"pub_id":"P2","year":2004,"authors":["Rossi, M."],"addresses":[],)"
      R"("category":"mathematics","citation_count":7})"
      "\n";
  std::istringstream in(input);
  PublicationCorpus corpus = parse_publications(in);

  std::ostringstream out;
  write_publications(out, corpus.records);
  std::istringstream again(out.str());
  PublicationCorpus reparsed = parse_publications(again);

  REQUIRE(reparsed.records.size() == corpus.records.size());
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const auto& a = corpus.records[i];
    const auto& b = reparsed.records[i];
    CHECK(a.pub_id == b.pub_id);
    CHECK(a.year == b.year);
    CHECK(a.addresses == b.addresses);
    CHECK(a.category == b.category);
    CHECK(a.citation_snapshot == b.citation_snapshot);
    CHECK(a.citation_events.has_value() == b.citation_events.has_value());
    if (a.citation_events) {
      CHECK(*a.citation_events == *b.citation_events);
    }
    REQUIRE(a.mentions.size() == b.mentions.size());
    for (std::size_t m = 0; m < a.mentions.size(); ++m) {
      CHECK(a.mentions[m].raw == b.mentions[m].raw);
      CHECK(a.mentions[m].surname_norm == b.mentions[m].surname_norm);
      CHECK(a.mentions[m].initials == b.mentions[m].initials);
      CHECK(a.mentions[m].position == b.mentions[m].position);
    }
  }

  // Byte-identical on the second pass as well.
  std::ostringstream out2;
  write_publications(out2, reparsed.records);
  CHECK(out.str() == out2.str());
}

TEST_CASE("roster and scheme round-trips") {
  std::string roster_text =
      "researcher_id,surname,given_names,institution_id,entry_year,exit_year,"
      "sds_history\n"
      "R1,D'Angelo,Ciriaco Andrea,UNIV-02,1998,,1998:ING-IND/35\n"
      "R2,Rossi,Maria,UNIV-01,2000,2006,2000:MAT/05;2003:FIS/01\n";
  std::istringstream rin(roster_text);
  auto roster = parse_roster(rin);
  std::ostringstream rout;
  write_roster(rout, roster);
  CHECK(rout.str() == roster_text);

  std::string scheme_text =
      "sds_code,sds_name,uda_code,uda_name\n"
      "FIS/01,Experimental physics,02,Physics\n"
      "MAT/05,Mathematical analysis,01,Mathematics and computer sciences\n";
  std::istringstream sin(scheme_text);
  auto scheme = parse_scheme(sin);
  CHECK(scheme.udas.size() == 2);
  CHECK(scheme.uda_of("FIS/01") == "02");
  CHECK(scheme.uda_of("XXX/99") == "");
  std::ostringstream sout;
  write_scheme(sout, scheme);
  CHECK(sout.str() == scheme_text);

  std::string affinity_text =
      "category,sds_code\n"
      "physics multidisciplinary,FIS/01\n";
  std::istringstream ain(affinity_text);
  parse_affinity(ain, scheme);
  REQUIRE(scheme.category_affinity.has_value());
  CHECK(scheme.category_affinity->at("physics multidisciplinary").count("FIS/01") == 1);

  std::istringstream bad_affinity(
      "category,sds_code\n"
      "physics,NOPE/01\n");
  ClassificationScheme scheme2 = scheme;
  CHECK_THROWS_AS(parse_affinity(bad_affinity, scheme2), ParseError);
}
