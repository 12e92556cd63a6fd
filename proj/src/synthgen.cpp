#include "bibench/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "bibench/names.hpp"
#include "bibench/rng.hpp"

namespace bibench {

namespace {

struct CatalogField {
  const char* sds_code;
  const char* sds_name;
  const char* uda_code;
  const char* uda_name;
  const char* category;
  double pubs_per_researcher;
  double citation_log_mean;
  double citation_log_sd;
};

// Hard-science field catalog with per-field publication and citation
// intensity: lab sciences publish and get cited much more heavily than
// mathematics or engineering, which is exactly the contrast the benchmark
// tables are supposed to expose.
const CatalogField kCatalog[] = {
    {"MAT/01", "Mathematical logic", "01", "Mathematics and computer sciences",
     "mathematics", 1.6, 0.3, 0.8},
    {"MAT/05", "Mathematical analysis", "01",
     "Mathematics and computer sciences", "mathematics applied", 1.8, 0.4, 0.8},
    {"INF/01", "Informatics", "01", "Mathematics and computer sciences",
     "computer science theory methods", 2.0, 0.5, 0.9},
    {"FIS/01", "Experimental physics", "02", "Physics",
     "physics multidisciplinary", 3.2, 1.6, 1.0},
    {"FIS/03", "Physics of matter", "02", "Physics",
     "physics condensed matter", 3.4, 1.8, 1.1},
    {"FIS/05", "Astronomy and astrophysics", "02", "Physics",
     "astronomy astrophysics", 3.0, 1.9, 1.1},
    {"CHIM/02", "Physical chemistry", "03", "Chemistry", "chemistry physical",
     3.6, 1.8, 1.0},
    {"CHIM/03", "General and inorganic chemistry", "03", "Chemistry",
     "chemistry inorganic nuclear", 3.4, 1.7, 1.0},
    {"CHIM/06", "Organic chemistry", "03", "Chemistry", "chemistry organic",
     3.5, 1.8, 1.0},
    {"GEO/02", "Stratigraphic geology", "04", "Earth sciences",
     "geosciences multidisciplinary", 2.2, 0.8, 0.9},
    {"GEO/10", "Solid earth geophysics", "04", "Earth sciences",
     "geochemistry geophysics", 2.4, 0.9, 0.9},
    {"BIO/10", "Biochemistry", "05", "Biology",
     "biochemistry molecular biology", 3.6, 1.7, 1.1},
    {"BIO/18", "Genetics", "05", "Biology", "genetics heredity", 3.2, 1.8, 1.1},
    {"BIO/09", "Physiology", "05", "Biology", "physiology", 3.0, 1.6, 1.0},
    {"MED/01", "Medical statistics", "06", "Medicine",
     "medicine research experimental", 3.0, 1.5, 1.2},
    {"MED/09", "Internal medicine", "06", "Medicine",
     "medicine general internal", 3.8, 1.6, 1.2},
    {"MED/26", "Neurology", "06", "Medicine", "clinical neurology", 3.4, 1.7,
     1.1},
    {"AGR/07", "Agricultural genetics", "07",
     "Agricultural and veterinary sciences", "agronomy", 2.4, 1.0, 0.9},
    {"VET/05", "Infectious diseases of animals", "07",
     "Agricultural and veterinary sciences", "veterinary sciences", 2.2, 0.9,
     0.9},
    {"ICAR/08", "Structural mechanics", "08",
     "Civil engineering and architecture", "engineering civil", 1.8, 0.6, 0.8},
    {"ICAR/09", "Construction techniques", "08",
     "Civil engineering and architecture", "construction building technology",
     1.6, 0.5, 0.8},
    {"ING-IND/22", "Materials science", "09",
     "Industrial and information engineering",
     "materials science multidisciplinary", 2.6, 1.1, 0.9},
    {"ING-INF/05", "Information processing systems", "09",
     "Industrial and information engineering",
     "computer science information systems", 2.4, 0.7, 0.9},
    {"ING-IND/10", "Thermal engineering", "09",
     "Industrial and information engineering", "thermodynamics", 2.0, 0.8,
     0.9},
};

const char* kGivenNames[] = {
    "Maria",    "Marco",     "Giulia",   "Luca",      "Anna",     "Paolo",
    "Francesca", "Andrea",   "Elena",    "Giovanni",  "Chiara",   "Stefano",
    "Laura",    "Alessandro", "Silvia",  "Matteo",    "Valentina", "Davide",
    "Cristina", "Roberto",   "Federica", "Simone",    "Elisa",    "Fabio",
    "Martina",  "Riccardo",  "Sara",     "Antonio",   "Paola",    "Giorgio",
    "Alessia",  "Nicola",    "Claudia",  "Emanuele",  "Irene",    "Pietro",
    "Monica",   "Tommaso",   "Beatrice", "Franco",    "Serena",   "Dario",
    "Caterina", "Enrico",    "Lucia",    "Massimo",   "Teresa",   "Vittorio",
};

const char* kCities[] = {
    "Roma",    "Milano",  "Bologna", "Torino",  "Napoli",  "Padova",
    "Firenze", "Pisa",    "Genova",  "Bari",    "Trieste", "Pavia",
    "Verona",  "Parma",   "Siena",   "Perugia", "Catania", "Palermo",
    "Cagliari", "Ferrara", "Trento", "Ancona",  "Lecce",   "Udine",
    "Modena",  "Salerno", "Brescia", "Messina", "Sassari", "Urbino",
};

const char* kForeignAddresses[] = {
    "Institute for Advanced Study, Princeton, USA",
    "ETH Zurich, Zurich, Switzerland",
    "Max Planck Institute, Garching, Germany",
    "CNRS, Paris, France",
    "University of Cambridge, Cambridge, UK",
};

const char* kOnsets[] = {"B",  "C",  "D",  "F",  "G",  "L",  "M",
                         "N",  "P",  "R",  "S",  "T",  "V",  "Z",
                         "Br", "Cr", "Fr", "Gr", "Tr", "Sc"};
const char* kNuclei[] = {"a", "e", "i", "o", "u"};

// Unique surname for an index: three onset+vowel syllables. Distinct indexes
// give distinct letter sequences, so normalized keys never collide.
std::string surname_for_index(long idx) {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    long digit = idx % 100;
    idx /= 100;
    std::string onset = kOnsets[digit / 5];
    if (k > 0) onset[0] = char(std::tolower(onset[0]));
    s += onset;
    s += kNuclei[digit % 5];
  }
  return s;
}

// Display variant that folds back to the same normalized key: variant 3
// inserts an apostrophe, variant 4 accents the final 'a'/'e'. Letter content
// is never changed.
std::string render_surname(long base_idx, long salt) {
  std::string s = surname_for_index(base_idx);
  long variant = (base_idx + salt) % 5;
  if (variant == 3 && s.size() > 2) {
    s.insert(2, "'");
  } else if (variant == 4) {
    auto pos = s.rfind('a');
    if (pos != std::string::npos) {
      s.replace(pos, 1, "\xc3\xa0");  // à
    } else if ((pos = s.rfind('e')) != std::string::npos) {
      s.replace(pos, 1, "\xc3\xa8");  // è
    }
  }
  return s;
}

std::string department_for_uda(const std::string& uda_code) {
  static const std::map<std::string, std::string> kDepartments = {
      {"01", "Dept. of Mathematics"},
      {"02", "Dept. of Physics"},
      {"03", "Dept. of Chemistry"},
      {"04", "Dept. of Earth Sciences"},
      {"05", "Dept. of Biology"},
      {"06", "School of Medicine"},
      {"07", "Dept. of Agricultural Sciences"},
      {"08", "Dept. of Civil Engineering"},
      {"09", "Dept. of Engineering"},
  };
  auto it = kDepartments.find(uda_code);
  return it == kDepartments.end() ? "Dept. of Science" : it->second;
}

struct Institution {
  std::string id;
  std::string city;
  std::vector<std::string> variants;
};

std::vector<Institution> make_institutions(int n) {
  std::vector<Institution> institutions;
  const int n_cities = int(std::size(kCities));
  for (int i = 0; i < n; ++i) {
    Institution inst;
    char id[32];
    std::snprintf(id, sizeof(id), "UNIV-%02d", i + 1);
    inst.id = id;
    inst.city = kCities[i % n_cities];
    if (i >= n_cities) inst.city += std::to_string(i / n_cities + 1);
    inst.variants = {"University of " + inst.city, "Univ. " + inst.city,
                     inst.city + " University"};
    institutions.push_back(std::move(inst));
  }
  return institutions;
}

// Number of researchers that must share a surname to hit the target rate:
// the nearest achievable count (0 or anything >= 2). Throws when even the
// nearest one misses by more than a percentage point.
long colliding_count(long total, double rate) {
  if (total == 0) return 0;
  long target = std::lround(rate * double(total));
  std::vector<long> candidates = {target, target - 1, target + 1, 0, 2};
  long best = -1;
  double best_diff = 1e9;
  for (long m : candidates) {
    if (m < 0 || m > total || m == 1) continue;
    double diff = std::fabs(double(m) / double(total) - rate);
    if (diff < best_diff) {
      best_diff = diff;
      best = m;
    }
  }
  if (best < 0 || best_diff > 0.01 + 1e-12) {
    throw std::invalid_argument(
        "homonym rate " + std::to_string(rate) + " unattainable for " +
        std::to_string(total) + " researchers (nearest achievable fraction " +
        (best < 0 ? std::string("none")
                  : std::to_string(double(best) / double(total))) +
        ")");
  }
  return best;
}

}  // namespace

SynthConfig default_synth_config(std::uint64_t seed, long n_researchers,
                                 double homonym_rate, int n_sds) {
  const int catalog_size = int(std::size(kCatalog));
  if (n_sds <= 0 || n_sds > catalog_size) n_sds = catalog_size;
  SynthConfig config;
  config.seed = seed;
  config.homonym_rate = homonym_rate;
  for (int i = 0; i < n_sds; ++i) {
    const CatalogField& c = kCatalog[i];
    FieldSpec f;
    f.sds_code = c.sds_code;
    f.sds_name = c.sds_name;
    f.uda_code = c.uda_code;
    f.uda_name = c.uda_name;
    f.category = c.category;
    f.n_researchers =
        int(n_researchers / n_sds + (i < n_researchers % n_sds ? 1 : 0));
    f.pubs_per_researcher = c.pubs_per_researcher;
    f.citation_log_mean = c.citation_log_mean;
    f.citation_log_sd = c.citation_log_sd;
    config.fields.push_back(std::move(f));
  }
  return config;
}

SynthCorpus generate(const SynthConfig& config) {
  Rng rng(config.seed);
  SynthCorpus out;
  const WindowConfig& window = config.window;

  // Classification scheme and category affinity (a category is affine to
  // every SDS of its own UDA, so in-area cross publication still matches).
  std::map<std::string, std::set<std::string>> affinity;
  std::map<std::string, std::vector<std::size_t>> fields_by_uda;
  for (std::size_t i = 0; i < config.fields.size(); ++i) {
    const FieldSpec& f = config.fields[i];
    bool have_uda = false;
    for (const auto& u : out.scheme.udas) have_uda |= (u.code == f.uda_code);
    if (!have_uda) out.scheme.udas.push_back({f.uda_code, f.uda_name});
    out.scheme.sds.push_back({f.sds_code, f.sds_name, f.uda_code});
    fields_by_uda[f.uda_code].push_back(i);
  }
  for (const FieldSpec& f : config.fields) {
    for (std::size_t i : fields_by_uda[f.uda_code]) {
      affinity[f.category].insert(config.fields[i].sds_code);
    }
  }
  out.scheme.category_affinity = std::move(affinity);

  auto institutions = make_institutions(config.n_institutions);
  for (const Institution& inst : institutions) {
    for (const std::string& variant : inst.variants) {
      out.aliases.emplace_back(variant, inst.id);
    }
  }

  // Researcher slots, field by field.
  long total = 0;
  for (const FieldSpec& f : config.fields) total += f.n_researchers;
  std::vector<std::size_t> field_of(total);
  {
    std::size_t r = 0;
    for (std::size_t fi = 0; fi < config.fields.size(); ++fi) {
      for (int k = 0; k < config.fields[fi].n_researchers; ++k)
        field_of[r++] = fi;
    }
  }

  // Surname plan: `colliding` researchers share surnames in groups of two
  // (plus one group of three when the count is odd); everyone else gets a
  // unique one. Group membership is a random permutation of the population.
  long colliding = colliding_count(total, config.homonym_rate);
  std::vector<long> order(total);
  for (long i = 0; i < total; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<long> surname_base(total, -1);
  long n_groups = 0;
  {
    long pos = 0;
    long remaining = colliding;
    while (remaining > 0) {
      long size = (remaining == 3) ? 3 : 2;
      for (long k = 0; k < size; ++k) surname_base[order[pos + k]] = n_groups;
      pos += size;
      remaining -= size;
      ++n_groups;
    }
    long next_unique = n_groups;
    for (; pos < total; ++pos) surname_base[order[pos]] = next_unique++;
  }

  const int n_given = int(std::size(kGivenNames));
  std::vector<RosterEntry> roster;
  roster.reserve(total);
  for (long i = 0; i < total; ++i) {
    const FieldSpec& field = config.fields[field_of[i]];
    RosterEntry e;
    char id[32];
    std::snprintf(id, sizeof(id), "R%06ld", i + 1);
    e.researcher_id = id;
    e.surname = render_surname(surname_base[i], i);
    e.given_names = kGivenNames[rng.uniform_int(0, n_given - 1)];
    if (rng.bernoulli(0.4)) {
      std::string second = kGivenNames[rng.uniform_int(0, n_given - 1)];
      if (second != e.given_names) e.given_names += " " + second;
    }
    e.surname_norm = normalize_name(e.surname);
    e.given_initials = extract_initials(e.given_names);
    e.institution_id =
        institutions[rng.uniform_int(0, long(institutions.size()) - 1)].id;

    double r = rng.uniform();
    if (r < config.ineligible_prob / 2) {
      e.entry_year = int(rng.uniform_int(window.start_year + 1, window.end_year));
    } else if (r < config.ineligible_prob) {
      e.entry_year = int(rng.uniform_int(window.start_year - 15, window.start_year));
      e.exit_year = int(rng.uniform_int(window.start_year, window.end_year - 1));
    } else {
      e.entry_year = int(rng.uniform_int(window.start_year - 15, window.start_year));
      if (rng.bernoulli(0.15)) {
        e.exit_year = int(rng.uniform_int(window.end_year, window.end_year + 5));
      }
    }

    e.sds_history.push_back({e.entry_year, field.sds_code});
    const auto& siblings = fields_by_uda[field.uda_code];
    if (siblings.size() > 1 && rng.bernoulli(config.sds_change_prob) &&
        e.entry_year + 1 <= window.end_year) {
      std::size_t other = field_of[i];
      while (other == field_of[i]) {
        other = siblings[rng.uniform_int(0, long(siblings.size()) - 1)];
      }
      int change_year = int(rng.uniform_int(e.entry_year + 1, window.end_year));
      e.sds_history.push_back({change_year, config.fields[other].sds_code});
    }
    roster.push_back(std::move(e));
  }

  // Same-field researcher pools for coauthor sampling.
  std::vector<std::vector<long>> members(config.fields.size());
  for (long i = 0; i < total; ++i) members[field_of[i]].push_back(i);

  const long obs_days = to_epoch_days(window.observation_date);
  const long horizon_days = obs_days + 540;  // citations keep arriving past obs
  long pub_counter = 0;

  auto mention_raw = [&](const RosterEntry& e) {
    std::string raw = e.surname + ", ";
    raw += e.given_initials[0];
    raw += '.';
    if (e.given_initials.size() > 1 && rng.bernoulli(config.second_initial_prob)) {
      raw += e.given_initials[1];
      raw += '.';
    }
    return raw;
  };

  for (long i = 0; i < total; ++i) {
    const FieldSpec& field = config.fields[field_of[i]];
    long n_pubs = rng.poisson(field.pubs_per_researcher);
    for (long p = 0; p < n_pubs; ++p) {
      PublicationRecord pub;
      char id[32];
      std::snprintf(id, sizeof(id), "P%06ld", ++pub_counter);
      pub.pub_id = id;

      if (rng.bernoulli(config.out_of_window_prob)) {
        const int outside[] = {window.start_year - 2, window.start_year - 1,
                               window.end_year + 1};
        pub.year = outside[rng.uniform_int(0, 2)];
      } else {
        pub.year = int(rng.uniform_int(window.start_year, window.end_year));
      }

      double cat_roll = rng.uniform();
      if (cat_roll < config.own_category_prob) {
        pub.category = field.category;
      } else if (cat_roll <
                 config.own_category_prob + config.same_uda_category_prob) {
        const auto& siblings = fields_by_uda[field.uda_code];
        pub.category =
            config.fields[siblings[rng.uniform_int(0, long(siblings.size()) - 1)]]
                .category;
      } else {
        pub.category =
            config.fields[rng.uniform_int(0, long(config.fields.size()) - 1)]
                .category;
      }

      std::size_t byline_size = rng.weighted(config.coauthor_weights) + 1;
      std::vector<long> byline = {i};
      const auto& pool = members[field_of[i]];
      if (pool.size() > 1) {
        std::set<long> picked = {i};
        int attempts = 0;
        while (byline.size() < byline_size && attempts < 64) {
          long other = pool[rng.uniform_int(0, long(pool.size()) - 1)];
          ++attempts;
          if (picked.insert(other).second) byline.push_back(other);
        }
      }
      rng.shuffle(byline);

      std::vector<std::string> inst_seen;
      for (std::size_t pos = 0; pos < byline.size(); ++pos) {
        const RosterEntry& author = roster[byline[pos]];
        pub.mentions.push_back(
            make_mention(mention_raw(author), int(pos)));
        out.gold.push_back(
            {pub.pub_id, int(pos), author.researcher_id});
        if (std::find(inst_seen.begin(), inst_seen.end(),
                      author.institution_id) == inst_seen.end()) {
          inst_seen.push_back(author.institution_id);
          if (rng.bernoulli(config.address_present_prob)) {
            const Institution* inst = nullptr;
            for (const Institution& cand : institutions) {
              if (cand.id == author.institution_id) inst = &cand;
            }
            const std::string& variant =
                inst->variants[rng.uniform_int(0, long(inst->variants.size()) - 1)];
            pub.addresses.push_back(
                department_for_uda(config.fields[field_of[byline[pos]]].uda_code) +
                ", " + variant + ", " + inst->city + ", Italy");
          }
        }
      }
      if (rng.bernoulli(config.foreign_address_prob)) {
        pub.addresses.push_back(
            kForeignAddresses[rng.uniform_int(0, long(std::size(kForeignAddresses)) - 1)]);
      }

      double lognormal =
          std::exp(rng.normal(field.citation_log_mean, field.citation_log_sd));
      long citations = std::min<long>(long(lognormal), 5000);
      if (rng.bernoulli(config.snapshot_prob)) {
        pub.citation_snapshot = citations;
      } else {
        std::vector<Date> events;
        events.reserve(std::size_t(citations));
        long day0 = to_epoch_days(Date{pub.year, 1, 1});
        for (long c = 0; c < citations; ++c) {
          events.push_back(from_epoch_days(rng.uniform_int(day0, horizon_days)));
        }
        std::sort(events.begin(), events.end());
        pub.citation_events = std::move(events);
      }
      out.publications.push_back(std::move(pub));
    }
  }

  out.roster = std::move(roster);

  // True per-cell citation means. A cell whose every paper is uncited at the
  // observation date cannot carry a positive baseline, so its first paper
  // (by id) gets one citation before recomputing.
  out.baselines = compute_baselines(out.publications, window.observation_date);
  std::map<std::pair<std::string, int>, std::string> zero_cells;
  for (const PublicationRecord& pub : out.publications) {
    std::pair<std::string, int> cell{pub.category, pub.year};
    if (out.baselines.c0.count(cell)) continue;
    auto it = zero_cells.find(cell);
    if (it == zero_cells.end() || pub.pub_id < it->second) {
      zero_cells[cell] = pub.pub_id;
    }
  }
  if (!zero_cells.empty()) {
    for (PublicationRecord& pub : out.publications) {
      auto it = zero_cells.find({pub.category, pub.year});
      if (it == zero_cells.end() || it->second != pub.pub_id) continue;
      if (pub.citation_events) {
        Date d{pub.year, 1, 1};
        if (window.observation_date < d) d = window.observation_date;
        pub.citation_events->insert(pub.citation_events->begin(), d);
        std::sort(pub.citation_events->begin(), pub.citation_events->end());
      } else {
        pub.citation_snapshot = std::max<long>(pub.citation_snapshot.value_or(0), 1);
      }
    }
    out.baselines =
        compute_baselines(out.publications, window.observation_date);
  }

  return out;
}

CensusReport corpus_census(std::span<const PublicationRecord> pubs,
                           std::span<const RosterEntry> roster) {
  CensusReport census;
  census.publications = long(pubs.size());
  census.researchers = long(roster.size());
  for (const PublicationRecord& pub : pubs) {
    census.mentions += long(pub.mentions.size());
  }
  if (!roster.empty()) {
    std::unordered_map<std::string, long> surnames;
    for (const RosterEntry& e : roster) ++surnames[e.surname_norm];
    long sharing = 0;
    for (const RosterEntry& e : roster) {
      if (surnames[e.surname_norm] > 1) ++sharing;
    }
    census.homonym_fraction = double(sharing) / double(roster.size());
  }
  return census;
}

}  // namespace bibench
