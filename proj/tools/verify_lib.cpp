#include "verify_lib.hpp"

#include <algorithm>
#include <sstream>

#include "bcast/errors.hpp"

namespace bcast::verify {

namespace {

constexpr std::size_t kHarvestLimit = 200000;

Graph make(GraphFamily family, int n) {
  return family == GraphFamily::Path ? Graph::path(n) : Graph::cycle(n);
}

std::string tag(GraphFamily family, int n) {
  return (family == GraphFamily::Path ? "P" : "C") + std::to_string(n);
}

std::vector<Broadcast> harvest(const Graph& g, Parameter p,
                               const SolveOptions& options, Check& check) {
  WitnessList list = solve_all_witnesses(g, p, kHarvestLimit, options);
  if (list.truncated) {
    check.ok = false;
    check.detail = "witness harvest truncated";
  }
  return std::move(list.witnesses);
}

}  // namespace

std::vector<Parameter> default_params(int n) {
  if (n <= 10)
    return {kBroadcastParameters.begin(), kBroadcastParameters.end()};
  if (n <= 13) return {Parameter::i_b, Parameter::p_b};
  return {};
}

std::vector<Check> check_formulas_vs_solver(GraphFamily family, int from,
                                            int to,
                                            const std::vector<Parameter>& params,
                                            const SolveOptions& options) {
  std::vector<Check> out;
  for (int n = from; n <= to; ++n) {
    std::vector<Parameter> selected = params.empty() ? default_params(n) : params;
    if (selected.empty()) {
      out.push_back({tag(family, n) + " formula==solve", true,
                     "skipped (no parameters selected at this order)"});
      continue;
    }
    Graph g = make(family, n);
    Check check{tag(family, n) + " formula==solve"};
    std::ostringstream detail;
    for (Parameter p : selected) {
      int expected = formula_value(family, p, n);
      int got = solve(g, p, options).value;
      if (expected != got) {
        check.ok = false;
        detail << (detail.tellp() > 0 ? "; " : "") << parameter_name(p)
               << ": formula " << expected << " != solve " << got;
      }
    }
    check.detail = detail.str();
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<Check> check_constructions(GraphFamily family, int from, int to,
                                       const std::vector<Parameter>& params,
                                       int solve_compare_up_to,
                                       const SolveOptions& options) {
  std::vector<Check> out;
  std::vector<Parameter> selected =
      params.empty()
          ? std::vector<Parameter>(kBroadcastParameters.begin(),
                                   kBroadcastParameters.end())
          : params;
  for (int n = from; n <= to; ++n) {
    Check check{tag(family, n) + " construction certificates"};
    std::ostringstream detail;
    Graph g = make(family, n);
    for (Parameter p : selected) {
      if (!is_broadcast_parameter(p)) continue;
      try {
        WitnessRecipe recipe = construct_witness(family, p, n);
        if (n <= solve_compare_up_to) {
          int optimum = solve(g, p, options).value;
          if (recipe.witness.cost() != optimum) {
            check.ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << parameter_name(p)
                   << ": witness cost " << recipe.witness.cost()
                   << " != optimum " << optimum;
          }
        }
      } catch (const InternalError& e) {
        check.ok = false;
        detail << (detail.tellp() > 0 ? "; " : "") << e.what();
      }
    }
    check.detail = detail.str();
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<Check> check_chains(GraphFamily family, int from, int to,
                                const SolveOptions& options) {
  std::vector<Check> out;
  for (int n = from; n <= to; ++n) {
    Check check{tag(family, n) + " inequality chains"};
    try {
      chain_report(make(family, n), options);
    } catch (const InternalError& e) {
      check.ok = false;
      check.detail = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

namespace {

Check lemma_a_cycle(int n, const SolveOptions& options) {
  Check check{"C" + std::to_string(n) +
              " IR_b optima: undominated vertices pairwise non-adjacent"};
  Graph g = Graph::cycle(n);
  for (const Broadcast& f : harvest(g, Parameter::IR_b, options, check)) {
    auto cnt = hear_counts(g, f);
    for (int u = 0; u < n; ++u) {
      if (cnt[u] == 0 && cnt[(u + 1) % n] == 0) {
        check.ok = false;
        check.detail = "adjacent undominated pair in " + format_broadcast(f);
        return check;
      }
    }
  }
  return check;
}

Check lemma_b_path(int n, const SolveOptions& options) {
  Check check{"P" + std::to_string(n) +
              " maximal irredundant: x1/x(n-2) dominated, undominated "
              "vertices have dominated neighbors"};
  Graph g = Graph::path(n);
  enumerate_broadcasts(g, Cap::Eccentricity, [&](const Broadcast& f) {
    if (!is_irredundant(g, f) ||
        !is_maximal(g, f, Kind::Irredundant, Cap::Eccentricity,
                    options.node_guard))
      return true;
    auto cnt = hear_counts(g, f);
    if (cnt[1] == 0 || cnt[n - 2] == 0) {
      check.ok = false;
      check.detail = "second vertex undominated in " + format_broadcast(f);
      return false;
    }
    for (int u = 0; u < n; ++u) {
      if (cnt[u] != 0) continue;
      bool has_dominated_neighbor = false;
      for (int v : g.neighbors(u))
        if (cnt[v] > 0) has_dominated_neighbor = true;
      if (!has_dominated_neighbor) {
        check.ok = false;
        check.detail = "isolated undominated vertex in " + format_broadcast(f);
        return false;
      }
    }
    return true;
  });
  return check;
}

Check lemma_c_path(int n, const SolveOptions& options) {
  Check check{"P" + std::to_string(n) + " i_b optima: end-spacing identities"};
  Graph g = Graph::path(n);
  bool any = false;
  for (const Broadcast& f : harvest(g, Parameter::i_b, options, check)) {
    auto support = f.support();
    int t = static_cast<int>(support.size());
    if (t < 2) continue;
    any = true;
    auto value = [&](int k) { return f.values[support[k]]; };
    bool ok = value(0) >= value(1) && value(t - 1) >= value(t - 2);
    ok = ok && support[0] <= value(0) && (n - 1 - support[t - 1]) <= value(t - 1);
    for (int k = 0; ok && k + 1 < t; ++k) {
      int gap = support[k + 1] - support[k];
      ok = std::max(value(k), value(k + 1)) + 1 <= gap &&
           gap <= value(k) + value(k + 1) + 1;
    }
    ok = ok && support[1] - support[0] == value(0) + 1 &&
         support[t - 1] - support[t - 2] == value(t - 1) + 1;
    if (!ok) {
      check.ok = false;
      check.detail = "identity fails for " + format_broadcast(f);
      return check;
    }
  }
  if (!any && check.ok) check.detail = "vacuous (no optimum with >= 2 broadcasters)";
  return check;
}

Check lemma_d_path(int n, const SolveOptions& options) {
  Check check{"P" + std::to_string(n) +
              " p_b optima: a 0/1 witness with gaps in {3,4,5} exists"};
  Graph g = Graph::path(n);
  bool found = false;
  for (const Broadcast& f : harvest(g, Parameter::p_b, options, check)) {
    if (std::any_of(f.values.begin(), f.values.end(),
                    [](int v) { return v > 1; }))
      continue;
    auto support = f.support();
    bool gaps_ok = true;
    for (std::size_t k = 0; k + 1 < support.size(); ++k) {
      int gap = support[k + 1] - support[k];
      if (gap < 3 || gap > 5) gaps_ok = false;
    }
    if (gaps_ok) {
      found = true;
      break;
    }
  }
  if (!found) {
    check.ok = false;
    check.detail = "no optimal 0/1 witness with admissible gaps";
  }
  return check;
}

Check lemma_e_path(int n, const SolveOptions& options) {
  Check check{"P" + std::to_string(n) + " i_b optima: an all-ones witness exists"};
  Graph g = Graph::path(n);
  bool found = false;
  for (const Broadcast& f : harvest(g, Parameter::i_b, options, check)) {
    if (std::all_of(f.values.begin(), f.values.end(),
                    [](int v) { return v <= 1; })) {
      found = true;
      break;
    }
  }
  if (!found) {
    check.ok = false;
    check.detail = "no optimal witness with every positive value 1";
  }
  return check;
}

}  // namespace

std::vector<Check> check_structural_lemmas(GraphFamily family, int from, int to,
                                           const SolveOptions& options) {
  std::vector<Check> out;
  if (family == GraphFamily::Cycle) {
    for (int n = std::max(from, 3); n <= std::min(to, 9); ++n)
      out.push_back(lemma_a_cycle(n, options));
    return out;
  }
  for (int n = std::max(from, 3); n <= std::min(to, 8); ++n)
    out.push_back(lemma_b_path(n, options));
  for (int n = std::max(from, 3); n <= std::min(to, 10); ++n)
    out.push_back(lemma_c_path(n, options));
  for (int n = std::max(from, 2); n <= std::min(to, 10); ++n)
    out.push_back(lemma_d_path(n, options));
  for (int n = std::max(from, 2); n <= std::min(to, 10); ++n)
    out.push_back(lemma_e_path(n, options));
  return out;
}

std::vector<Check> check_repairs(GraphFamily family, int from, int to,
                                 const SolveOptions& options) {
  std::vector<Check> out;
  bool path = family == GraphFamily::Path;
  for (int n = std::max(from, path ? 2 : 3); n <= std::min(to, 12); ++n) {
    Graph g = make(family, n);
    Check check{tag(family, n) + (path ? " ir_b repair" : " IR_b repair")};
    std::vector<Broadcast> optima =
        harvest(g, path ? Parameter::ir_b : Parameter::IR_b, options, check);
    int repaired = 0;
    try {
      for (const Broadcast& f : optima) {
        if (is_dominating(g, f)) continue;
        if (path) {
          Broadcast h = endpoint_repair_path(g, f);
          RepairTrace trace = repair_irredundant_path(g, h);
          if (!is_dominating(g, trace.final) || trace.final.cost() != f.cost())
            throw InternalError("repair output not certified");
        } else {
          RepairTrace trace = repair_irredundant_cycle(g, f);
          if (trace.final.cost() != f.cost())
            throw InternalError("repair changed the cost");
        }
        ++repaired;
      }
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = e.what();
    }
    if (check.ok)
      check.detail = repaired == 0 ? "vacuous (every optimum dominating)"
                                   : std::to_string(repaired) + " repaired";
    out.push_back(std::move(check));

    // Existence corollaries.
    if (n <= 10) {
      Check exists{tag(family, n) + " dominating ir_b optimum exists"};
      bool found = false;
      for (const Broadcast& f :
           harvest(g, Parameter::ir_b, options, exists))
        if (is_dominating(g, f)) {
          found = true;
          break;
        }
      if (!found) {
        exists.ok = false;
        exists.detail = "no dominating optimum";
      }
      out.push_back(std::move(exists));
    }
    if (!path) {
      Check exists{tag(family, n) + " minimal dominating broadcast of cost IR_b exists"};
      bool found = false;
      for (const Broadcast& f : harvest(g, Parameter::IR_b, options, exists))
        if (is_dominating(g, f) && is_minimal(g, f, Kind::Dominating)) {
          found = true;
          break;
        }
      if (!found) {
        exists.ok = false;
        exists.detail = "no minimal dominating optimum";
      }
      out.push_back(std::move(exists));
    }
  }
  return out;
}

}  // namespace bcast::verify
