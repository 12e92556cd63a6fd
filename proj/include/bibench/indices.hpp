#ifndef BIBENCH_INDICES_HPP_
#define BIBENCH_INDICES_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibench/corpus.hpp"
#include "bibench/disambig.hpp"

namespace bibench {

// Per-publication inputs for the index computations.
struct PaperStat {
  std::string pub_id;
  long citations = 0;
  int n_authors = 1;
  std::string category;
  int year = 0;
};

// Mean citations per article for each (subject category, year) cell. Used to
// rescale citation counts so indexes become comparable across fields.
struct FieldBaseline {
  std::map<std::pair<std::string, int>, double> c0;

  std::optional<double> lookup(const std::string& category, int year) const;
};

// Empirical per-(category, year) mean of citations observed at `obs`.
// Cells whose mean is zero are omitted (a baseline must be positive).
FieldBaseline compute_baselines(std::span<const PublicationRecord> pubs,
                                const Date& obs);

// CSV with header category,year,c0.
FieldBaseline parse_baselines(std::istream& in);
void write_baselines(std::ostream& out, const FieldBaseline& baselines);

// Whether fictitious zero-cited papers may carry g past the publication
// count. Published tables cannot discriminate the two conventions, so both
// are available; padding is the default.
enum class GConvention { padded_zeros, capped_at_papers };

enum class ProfileStatus { ok, zero_publications, zero_citations };
std::string to_string(ProfileStatus status);
std::optional<ProfileStatus> parse_status(std::string_view text);

struct IndexSet {
  long h = 0;
  long g = 0;
  double h_individual = 0.0;
  double h_m = 0.0;
  std::optional<long> h_f;  // absent when no baselines were supplied
  ProfileStatus status = ProfileStatus::zero_publications;
};

// Largest h such that at least h of the counts are >= h; 0 for empty input.
long h_index(std::span<const long> counts);

// Largest g such that the g most-cited papers together received at least g^2
// citations, with the list treated as padded by zero-cited papers under
// padded_zeros.
long g_index(std::span<const long> counts,
             GConvention conv = GConvention::padded_zeros);

// The h most-cited papers. Citation ties at the core boundary break toward
// the lexicographically smaller pub_id so downstream values are deterministic.
std::vector<PaperStat> h_core(std::span<const PaperStat> papers);

// h divided by the mean author count over the h core; 0 when h = 0.
double individual_h(std::span<const PaperStat> papers);

// Fractional-rank h: rank r contributes 1/n_authors of a rank, and the index
// is the largest effective rank still covered by the citations at that rank.
double hm_index(std::span<const PaperStat> papers);

// h over citations rescaled by the (category, year) baseline. Throws when a
// paper's cell is missing from the baselines, naming the cell.
long generalized_h(std::span<const PaperStat> papers,
                   const FieldBaseline& baselines);

IndexSet compute_indexes(std::span<const PaperStat> papers,
                         const FieldBaseline* baselines = nullptr,
                         GConvention conv = GConvention::padded_zeros);

// In-window publications attributed to one researcher, with citations
// observed at `obs`.
std::vector<PaperStat> gather_papers(const std::string& researcher_id,
                                     const AttributionTable& attributions,
                                     const PublicationCorpus& corpus,
                                     const WindowConfig& window,
                                     const Date& obs);

// Full index profile of one researcher over the window.
IndexSet profile(const std::string& researcher_id,
                 const AttributionTable& attributions,
                 const PublicationCorpus& corpus, const WindowConfig& window,
                 const Date& obs, const FieldBaseline* baselines = nullptr,
                 GConvention conv = GConvention::padded_zeros);

struct ResearcherProfile {
  std::string researcher_id;
  std::string sds_code;
  std::string uda_code;
  ProfileStatus status = ProfileStatus::zero_publications;
  long n_pubs = 0;
  std::optional<long> h;
  std::optional<long> g;
  std::optional<double> h_individual;
  std::optional<double> h_m;
  std::optional<long> h_f;
};

struct ProfileRun {
  std::vector<ResearcherProfile> profiles;
  std::vector<std::string> warnings;
};

// Profiles every researcher in `researchers` (callers pass the eligible
// subset). Work is spread over threads; output order and content are
// independent of the schedule. Researchers whose h_f hits a missing baseline
// get h_f left empty and a warning instead of failing the run.
ProfileRun profile_all(std::span<const RosterEntry> researchers,
                       const AttributionTable& attributions,
                       const PublicationCorpus& corpus,
                       const ClassificationScheme& scheme,
                       const WindowConfig& window,
                       const FieldBaseline* baselines = nullptr,
                       GConvention conv = GConvention::padded_zeros,
                       unsigned threads = 0);

enum class IndexKind { h, g, h_individual, h_m, h_f };
std::string to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view text);

// The researcher's value for one index, or nullopt when the profile is null
// (no publications / no citations) or the index was not computed.
std::optional<double> index_value(const ResearcherProfile& profile,
                                  IndexKind kind);

// CSV with header researcher_id,sds,uda,status,n_pubs,h,g,h_individual,h_m,h_f.
// Columns outside `selected` are left empty.
void write_profiles(std::ostream& out,
                    std::span<const ResearcherProfile> profiles,
                    std::span<const IndexKind> selected);
std::vector<ResearcherProfile> parse_profiles(std::istream& in);

}  // namespace bibench

#endif  // BIBENCH_INDICES_HPP_
