#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcast/parameters.hpp"

namespace bcast {

struct SolveOptions {
  /// Abort with ResourceLimitError once the search has visited this many
  /// assignment-tree nodes.
  std::uint64_t node_guard = kDefaultSearchGuard;
  /// Also count every optimal witness (extra enumeration pass).
  bool count_optima = false;
};

struct SolveResult {
  int value = 0;
  Broadcast witness;  // lexicographically smallest optimal witness
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
  std::optional<std::uint64_t> optimum_count;
};

/// Visits every valid broadcast on g within the cap exactly once, in
/// lexicographically ascending value order. Return false from the visitor to
/// stop early. Throws ResourceLimitError when the full product of per-vertex
/// ranges exceeds the guard. Returns the number of broadcasts visited.
std::uint64_t enumerate_broadcasts(
    const Graph& g, Cap cap, const std::function<bool(const Broadcast&)>& visit,
    std::uint64_t node_guard = kDefaultSearchGuard);

/// Exact optimum with a certified witness. Deterministic: ties are broken by
/// the lexicographically smallest witness value-sequence.
SolveResult solve(const Graph& g, const ParameterSpec& spec,
                  const SolveOptions& options = {});
SolveResult solve(const Graph& g, Parameter p, const SolveOptions& options = {});

struct WitnessList {
  std::vector<Broadcast> witnesses;  // lexicographic order
  bool truncated = false;
};

/// Every optimal broadcast satisfying the spec, up to limit.
WitnessList solve_all_witnesses(const Graph& g, const ParameterSpec& spec,
                                std::size_t limit,
                                const SolveOptions& options = {});
WitnessList solve_all_witnesses(const Graph& g, Parameter p, std::size_t limit,
                                const SolveOptions& options = {});

struct ChainCheck {
  std::string label;  // e.g. "ir_b <= gamma_b"
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};

/// All 16 parameter values plus verdicts for the standard inequality chains
///
///   ir_b <= gamma_b <= gamma <= Gamma <= Gamma_b <= IR_b
///   gamma_b <= i_b <= beta_b >= i >= gamma
///   p <= P <= P_b,   p_b <= rad <= diam <= P_b <= beta_b
///   Gamma_b <= m,    Gamma_b <= n - min_degree
///
/// Throws InternalError if any verdict fails: these are theorems, so a
/// failure means the solver is wrong.
struct ChainReport {
  std::map<Parameter, int> values;
  std::vector<ChainCheck> checks;
  bool all_hold = true;
};

ChainReport chain_report(const Graph& g, const SolveOptions& options = {});

}  // namespace bcast
