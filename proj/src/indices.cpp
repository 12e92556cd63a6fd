#include "bibench/indices.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <thread>
#include <unordered_map>

#include "bibench/csv.hpp"

namespace bibench {

namespace {

long long isqrt(long long x) {
  if (x <= 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while ((r + 1) * (r + 1) <= x) ++r;
  while (r * r > x) --r;
  return r;
}

std::vector<long> sorted_desc(std::span<const long> counts) {
  std::vector<long> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), std::greater<long>());
  return v;
}

// Citations descending, pub_id ascending within ties.
std::vector<PaperStat> sorted_papers(std::span<const PaperStat> papers) {
  std::vector<PaperStat> v(papers.begin(), papers.end());
  std::sort(v.begin(), v.end(), [](const PaperStat& a, const PaperStat& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return a.pub_id < b.pub_id;
  });
  return v;
}

}  // namespace

long h_index(std::span<const long> counts) {
  auto v = sorted_desc(counts);
  long h = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= static_cast<long>(i) + 1) {
      h = static_cast<long>(i) + 1;
    } else {
      break;
    }
  }
  return h;
}

long g_index(std::span<const long> counts, GConvention conv) {
  auto v = sorted_desc(counts);
  long best = 0;
  long long prefix = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    prefix += v[i];
    long long g = static_cast<long long>(i) + 1;
    if (prefix >= g * g) best = static_cast<long>(g);
  }
  if (conv == GConvention::padded_zeros) {
    // Beyond the real papers the padded prefix sum stays at the total, so
    // any g up to isqrt(total) qualifies.
    long long root = isqrt(prefix);
    if (root > static_cast<long long>(v.size())) {
      best = std::max(best, static_cast<long>(root));
    }
  }
  return best;
}

std::vector<PaperStat> h_core(std::span<const PaperStat> papers) {
  auto v = sorted_papers(papers);
  std::vector<long> counts;
  counts.reserve(v.size());
  for (const PaperStat& p : v) counts.push_back(p.citations);
  long h = h_index(counts);
  v.resize(static_cast<std::size_t>(h));
  return v;
}

double individual_h(std::span<const PaperStat> papers) {
  auto core = h_core(papers);
  if (core.empty()) return 0.0;
  double author_sum = 0.0;
  for (const PaperStat& p : core) author_sum += p.n_authors;
  double mean_authors = author_sum / static_cast<double>(core.size());
  return static_cast<double>(core.size()) / mean_authors;
}

double hm_index(std::span<const PaperStat> papers) {
  auto v = sorted_papers(papers);
  // Each prefix is summed in ascending weight order so that equal weight
  // sets produce bit-identical ranks no matter how the papers were ranked;
  // otherwise adding a citation could perturb the float sum by one ulp.
  std::multiset<double> weights;
  double best = 0.0;
  for (const PaperStat& p : v) {
    weights.insert(1.0 / static_cast<double>(p.n_authors));
    double effective_rank = 0.0;
    for (double w : weights) effective_rank += w;
    if (effective_rank <= static_cast<double>(p.citations)) {
      best = std::max(best, effective_rank);
    }
  }
  return best;
}

long generalized_h(std::span<const PaperStat> papers,
                   const FieldBaseline& baselines) {
  std::vector<double> normalized;
  normalized.reserve(papers.size());
  for (const PaperStat& p : papers) {
    auto c0 = baselines.lookup(p.category, p.year);
    if (!c0) {
      throw std::runtime_error("missing baseline for (" + p.category + ", " +
                               std::to_string(p.year) + ")");
    }
    normalized.push_back(static_cast<double>(p.citations) / *c0);
  }
  std::sort(normalized.begin(), normalized.end(), std::greater<double>());
  long k = 0;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (normalized[i] >= static_cast<double>(i + 1)) {
      k = static_cast<long>(i) + 1;
    } else {
      break;
    }
  }
  return k;
}

std::optional<double> FieldBaseline::lookup(const std::string& category,
                                            int year) const {
  auto it = c0.find({category, year});
  if (it == c0.end()) return std::nullopt;
  return it->second;
}

FieldBaseline compute_baselines(std::span<const PublicationRecord> pubs,
                                const Date& obs) {
  std::map<std::pair<std::string, int>, std::pair<double, long>> cells;
  for (const PublicationRecord& pub : pubs) {
    auto& [sum, count] = cells[{pub.category, pub.year}];
    sum += static_cast<double>(citations_at(pub, obs));
    count += 1;
  }
  FieldBaseline baselines;
  for (const auto& [key, cell] : cells) {
    double mean = cell.first / static_cast<double>(cell.second);
    if (mean > 0.0) baselines.c0[key] = mean;
  }
  return baselines;
}

FieldBaseline parse_baselines(std::istream& in) {
  FieldBaseline baselines;
  std::string line;
  if (!std::getline(in, line)) return baselines;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "category,year,c0") {
    throw ParseError(1, "expected baselines header 'category,year,c0'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected 3 fields, got " +
                                   std::to_string(fields.size()));
    }
    int year = 0;
    auto [ptr, ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), year);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      throw ParseError(lineno, "invalid year '" + fields[1] + "'");
    }
    double c0 = std::stod(fields[2]);
    if (!(c0 > 0.0)) {
      throw ParseError(lineno, "baseline c0 must be positive");
    }
    baselines.c0[{fields[0], year}] = c0;
  }
  return baselines;
}

void write_baselines(std::ostream& out, const FieldBaseline& baselines) {
  out << "category,year,c0\n";
  for (const auto& [key, c0] : baselines.c0) {
    std::vector<std::string> fields = {key.first, std::to_string(key.second),
                                       format_full(c0)};
    out << join_csv(fields) << '\n';
  }
}

std::string to_string(ProfileStatus status) {
  switch (status) {
    case ProfileStatus::ok:
      return "ok";
    case ProfileStatus::zero_publications:
      return "zero_publications";
    case ProfileStatus::zero_citations:
      return "zero_citations";
  }
  return "ok";
}

std::optional<ProfileStatus> parse_status(std::string_view text) {
  if (text == "ok") return ProfileStatus::ok;
  if (text == "zero_publications") return ProfileStatus::zero_publications;
  if (text == "zero_citations") return ProfileStatus::zero_citations;
  return std::nullopt;
}

IndexSet compute_indexes(std::span<const PaperStat> papers,
                         const FieldBaseline* baselines, GConvention conv) {
  IndexSet set;
  if (papers.empty()) {
    set.status = ProfileStatus::zero_publications;
    if (baselines) set.h_f = 0;
    return set;
  }
  std::vector<long> counts;
  counts.reserve(papers.size());
  bool any_cited = false;
  for (const PaperStat& p : papers) {
    counts.push_back(p.citations);
    any_cited = any_cited || p.citations > 0;
  }
  set.status = any_cited ? ProfileStatus::ok : ProfileStatus::zero_citations;
  set.h = h_index(counts);
  set.g = g_index(counts, conv);
  set.h_individual = individual_h(papers);
  set.h_m = hm_index(papers);
  if (baselines) set.h_f = generalized_h(papers, *baselines);
  return set;
}

std::vector<PaperStat> gather_papers(const std::string& researcher_id,
                                     const AttributionTable& attributions,
                                     const PublicationCorpus& corpus,
                                     const WindowConfig& window,
                                     const Date& obs) {
  std::vector<PaperStat> papers;
  for (const Attribution& link : attributions.links) {
    if (link.researcher_id != researcher_id) continue;
    const PublicationRecord* pub = corpus.find(link.pub_id);
    if (!pub || !in_window(*pub, window)) continue;
    papers.push_back({pub->pub_id, citations_at(*pub, obs),
                      static_cast<int>(pub->mentions.size()), pub->category,
                      pub->year});
  }
  return papers;
}

IndexSet profile(const std::string& researcher_id,
                 const AttributionTable& attributions,
                 const PublicationCorpus& corpus, const WindowConfig& window,
                 const Date& obs, const FieldBaseline* baselines,
                 GConvention conv) {
  auto papers = gather_papers(researcher_id, attributions, corpus, window, obs);
  return compute_indexes(papers, baselines, conv);
}

ProfileRun profile_all(std::span<const RosterEntry> researchers,
                       const AttributionTable& attributions,
                       const PublicationCorpus& corpus,
                       const ClassificationScheme& scheme,
                       const WindowConfig& window,
                       const FieldBaseline* baselines, GConvention conv,
                       unsigned threads) {
  // Group links per researcher once instead of rescanning the table.
  std::unordered_map<std::string, std::vector<const PublicationRecord*>> pubs_of;
  for (const Attribution& link : attributions.links) {
    const PublicationRecord* pub = corpus.find(link.pub_id);
    if (pub && in_window(*pub, window)) {
      pubs_of[link.researcher_id].push_back(pub);
    }
  }

  ProfileRun run;
  run.profiles.resize(researchers.size());
  std::vector<std::string> hf_errors(researchers.size());
  std::vector<std::string> fatal_errors(researchers.size());

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const RosterEntry& entry = researchers[i];
      ResearcherProfile& out = run.profiles[i];
      out.researcher_id = entry.researcher_id;
      try {
        out.sds_code = effective_sds(entry, window);
      } catch (const std::exception& e) {
        fatal_errors[i] = e.what();
        continue;
      }
      out.uda_code = scheme.uda_of(out.sds_code);

      std::vector<PaperStat> papers;
      if (auto it = pubs_of.find(entry.researcher_id); it != pubs_of.end()) {
        for (const PublicationRecord* pub : it->second) {
          papers.push_back({pub->pub_id,
                            citations_at(*pub, window.observation_date),
                            static_cast<int>(pub->mentions.size()),
                            pub->category, pub->year});
        }
      }
      out.n_pubs = static_cast<long>(papers.size());

      IndexSet set;
      try {
        set = compute_indexes(papers, baselines, conv);
      } catch (const std::exception& e) {
        set = compute_indexes(papers, nullptr, conv);
        hf_errors[i] = entry.researcher_id + ": " + e.what();
      }
      out.status = set.status;
      out.h = set.h;
      out.g = set.g;
      out.h_individual = set.h_individual;
      out.h_m = set.h_m;
      out.h_f = set.h_f;
    }
  };

  if (threads == 0) {
    threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  }
  if (threads <= 1 || researchers.size() < 64) {
    worker(0, researchers.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (researchers.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(begin + chunk, researchers.size());
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (const std::string& e : fatal_errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  for (std::string& e : hf_errors) {
    if (!e.empty()) run.warnings.push_back("h_f not computed for " + e);
  }
  return run;
}

std::string to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::h:
      return "h";
    case IndexKind::g:
      return "g";
    case IndexKind::h_individual:
      return "hi";
    case IndexKind::h_m:
      return "hm";
    case IndexKind::h_f:
      return "hf";
  }
  return "h";
}

std::optional<IndexKind> parse_index_kind(std::string_view text) {
  if (text == "h") return IndexKind::h;
  if (text == "g") return IndexKind::g;
  if (text == "hi") return IndexKind::h_individual;
  if (text == "hm") return IndexKind::h_m;
  if (text == "hf") return IndexKind::h_f;
  return std::nullopt;
}

std::optional<double> index_value(const ResearcherProfile& profile,
                                  IndexKind kind) {
  if (profile.status != ProfileStatus::ok) return std::nullopt;
  switch (kind) {
    case IndexKind::h:
      if (profile.h) return static_cast<double>(*profile.h);
      return std::nullopt;
    case IndexKind::g:
      if (profile.g) return static_cast<double>(*profile.g);
      return std::nullopt;
    case IndexKind::h_individual:
      return profile.h_individual;
    case IndexKind::h_m:
      return profile.h_m;
    case IndexKind::h_f:
      if (profile.h_f) return static_cast<double>(*profile.h_f);
      return std::nullopt;
  }
  return std::nullopt;
}

void write_profiles(std::ostream& out,
                    std::span<const ResearcherProfile> profiles,
                    std::span<const IndexKind> selected) {
  auto wanted = [&](IndexKind kind) {
    if (selected.empty()) return true;
    return std::find(selected.begin(), selected.end(), kind) != selected.end();
  };
  out << "researcher_id,sds,uda,status,n_pubs,h,g,h_individual,h_m,h_f\n";
  for (const ResearcherProfile& p : profiles) {
    std::vector<std::string> fields = {
        p.researcher_id,
        p.sds_code,
        p.uda_code,
        to_string(p.status),
        std::to_string(p.n_pubs),
        wanted(IndexKind::h) && p.h ? std::to_string(*p.h) : "",
        wanted(IndexKind::g) && p.g ? std::to_string(*p.g) : "",
        wanted(IndexKind::h_individual) && p.h_individual
            ? format_full(*p.h_individual)
            : "",
        wanted(IndexKind::h_m) && p.h_m ? format_full(*p.h_m) : "",
        wanted(IndexKind::h_f) && p.h_f ? std::to_string(*p.h_f) : "",
    };
    out << join_csv(fields) << '\n';
  }
}

std::vector<ResearcherProfile> parse_profiles(std::istream& in) {
  std::vector<ResearcherProfile> profiles;
  std::string line;
  if (!std::getline(in, line)) return profiles;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "researcher_id,sds,uda,status,n_pubs,h,g,h_individual,h_m,h_f") {
    throw ParseError(1, "unexpected profiles header");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 10) {
      throw ParseError(lineno, "expected 10 fields, got " +
                                   std::to_string(fields.size()));
    }
    ResearcherProfile p;
    p.researcher_id = fields[0];
    p.sds_code = fields[1];
    p.uda_code = fields[2];
    auto status = parse_status(fields[3]);
    if (!status) throw ParseError(lineno, "unknown status '" + fields[3] + "'");
    p.status = *status;
    p.n_pubs = std::stol(fields[4]);
    if (!fields[5].empty()) p.h = std::stol(fields[5]);
    if (!fields[6].empty()) p.g = std::stol(fields[6]);
    if (!fields[7].empty()) p.h_individual = std::stod(fields[7]);
    if (!fields[8].empty()) p.h_m = std::stod(fields[8]);
    if (!fields[9].empty()) p.h_f = std::stol(fields[9]);
    profiles.push_back(std::move(p));
  }
  return profiles;
}

}  // namespace bibench
