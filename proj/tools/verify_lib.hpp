#pragma once

#include <string>
#include <vector>

#include "bcast/constructions.hpp"
#include "bcast/repair.hpp"
#include "bcast/solver.hpp"

namespace bcast::verify {

struct Check {
  Check() = default;
  explicit Check(std::string label_) : label(std::move(label_)) {}
  Check(std::string label_, bool ok_, std::string detail_)
      : label(std::move(label_)), ok(ok_), detail(std::move(detail_)) {}

  std::string label;
  bool ok = true;
  std::string detail;  // failure explanation, or a note such as "vacuous"
};

/// Parameters verified against the solver at order n under the default
/// policy: all eight broadcast parameters through n = 10, the two cheap
/// minimization parameters (i_b, p_b) through n = 13, nothing beyond.
std::vector<Parameter> default_params(int n);

/// formula_value == solve for every selected parameter and order.
/// An empty `params` selects default_params(n) per order.
std::vector<Check> check_formulas_vs_solver(GraphFamily family, int from,
                                            int to,
                                            const std::vector<Parameter>& params,
                                            const SolveOptions& options);

/// construct_witness certifies (it throws on failure); additionally compares
/// the witness cost with the solver optimum for n <= solve_compare_up_to.
std::vector<Check> check_constructions(GraphFamily family, int from, int to,
                                       const std::vector<Parameter>& params,
                                       int solve_compare_up_to,
                                       const SolveOptions& options);

/// chain_report on every order in range (capped at n = 9 by the caller).
std::vector<Check> check_chains(GraphFamily family, int from, int to,
                                const SolveOptions& options);

/// The structural facts behind the closed forms, checked over enumerated
/// optima (and, for maximal irredundant broadcasts, over full enumeration):
///   (a) cycles: undominated vertices of IR_b optima are pairwise non-adjacent
///   (b) paths: maximal irredundant broadcasts dominate the second vertex
///       from each end, and undominated vertices have dominated neighbors
///   (c) paths: i_b optima with >= 2 broadcast vertices satisfy the four
///       end-spacing identities
///   (d) paths: some p_b optimum is 0/1-valued with consecutive broadcasters
///       at distance 3, 4, or 5
///   (e) paths: some i_b optimum has every positive value equal to 1
std::vector<Check> check_structural_lemmas(GraphFamily family, int from, int to,
                                           const SolveOptions& options);

/// Harvests every non-dominating optimum (ir_b on paths, IR_b on cycles),
/// repairs each to a dominating broadcast of equal cost, and records vacuity
/// when none exist. Also checks the existence corollaries: a dominating ir_b
/// optimum on both families (n <= 10) and a minimal dominating broadcast of
/// cost IR_b on cycles.
std::vector<Check> check_repairs(GraphFamily family, int from, int to,
                                 const SolveOptions& options);

}  // namespace bcast::verify
