#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcast/graph.hpp"

namespace bcast {

/// Node guard shared by every exhaustive search in the library.
inline constexpr std::uint64_t kDefaultSearchGuard = 10'000'000'000ULL;

/// An integer transmission power per vertex; 0 means the vertex does not
/// broadcast. Valid on a graph g when f(v) <= ecc(v) for every v.
struct Broadcast {
  std::vector<int> values;

  Broadcast() = default;
  explicit Broadcast(std::vector<int> v) : values(std::move(v)) {}

  int cost() const;                  // sum of all values
  std::vector<int> support() const;  // vertices with positive value

  bool operator==(const Broadcast&) const = default;
};

enum class Kind { Dominating, Irredundant, Independent, Packing };

/// Per-vertex value cap selecting the search family: the vertex eccentricity,
/// or 1 (the classical 0/1 family, i.e. vertex sets).
enum class Cap { Eccentricity, One };

const char* kind_name(Kind k);
int cap_value(const Graph& g, Cap cap, int v);

/// Text form: a plain digit string when every value is <= 9 ("011000030"),
/// otherwise comma-separated integers ("0,10,0"). Round-trips exactly.
Broadcast parse_broadcast(std::string_view text);
std::string format_broadcast(const Broadcast& f);

/// True iff f(v) <= ecc(v) everywhere. Throws FormatError on length mismatch.
bool validate(const Graph& g, const Broadcast& f);
void require_valid(const Graph& g, const Broadcast& f);  // DomainError if not

/// H_f(u): the broadcast vertices u hears, i.e. {v : f(v) > 0, d(u,v) <= f(v)}.
std::vector<int> hearers(const Graph& g, const Broadcast& f, int u);

/// |H_f(u)| for every u in one pass.
std::vector<int> hear_counts(const Graph& g, const Broadcast& f);

/// PN_f(v): vertices hearing v and nothing else. Requires f(v) >= 1.
std::vector<int> private_neighborhood(const Graph& g, const Broadcast& f, int v);

/// PB_f(v): {v} when f(v) = 1 and PN_f(v) = {v}; otherwise the private
/// neighbors at distance exactly f(v). Requires f(v) >= 1.
std::vector<int> private_border(const Graph& g, const Broadcast& f, int v);

bool is_dominating(const Graph& g, const Broadcast& f);   // every vertex hears someone
bool is_independent(const Graph& g, const Broadcast& f);  // broadcast vertices hear only themselves
bool is_packing(const Graph& g, const Broadcast& f);      // every vertex hears at most one
bool is_irredundant(const Graph& g, const Broadcast& f);  // every broadcast vertex has a border
bool has_kind(const Graph& g, const Broadcast& f, Kind k);

/// True iff no distinct broadcast of the same kind lies pointwise below
/// (is_minimal) or above (is_maximal) f within the capped family.
///
/// Single-step probes decide every case except irredundance, which needs an
/// exhaustive box search: one-step increments are necessary but not
/// sufficient for maximal irredundance (on the 6-vertex path, 001100 passes
/// every single increment yet 002200 is an irredundant broadcast above it).
///
/// Requires f valid, within the cap, and of the given kind (DomainError).
bool is_minimal(const Graph& g, const Broadcast& f, Kind k,
                Cap cap = Cap::Eccentricity,
                std::uint64_t guard = kDefaultSearchGuard);
bool is_maximal(const Graph& g, const Broadcast& f, Kind k,
                Cap cap = Cap::Eccentricity,
                std::uint64_t guard = kDefaultSearchGuard);

struct ExtremalityFlags {
  std::optional<bool> minimal;
  std::optional<bool> maximal;
};

/// Full derived semantics of one broadcast on one graph.
struct AnalysisReport {
  int cost = 0;
  std::vector<int> broadcast_vertices;               // V+_f
  std::vector<std::vector<int>> hears;               // H_f(u) per vertex
  std::vector<int> coverage;                         // N_f(V+_f)
  std::map<int, std::vector<int>> private_neighborhoods;
  std::map<int, std::vector<int>> private_borders;
  std::vector<int> undominated;                      // empty hears
  bool dominating = false;
  bool irredundant = false;
  bool independent = false;
  bool packing = false;
  /// Present only for kinds requested in AnalyzeOptions that f actually has.
  std::map<Kind, ExtremalityFlags> extremality;
};

struct AnalyzeOptions {
  std::vector<Kind> extremality_kinds;
  Cap cap = Cap::Eccentricity;
};

AnalysisReport analyze(const Graph& g, const Broadcast& f,
                       const AnalyzeOptions& options = {});

}  // namespace bcast
