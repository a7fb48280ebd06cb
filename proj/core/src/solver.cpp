#include "bcast/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bcast/errors.hpp"
#include "hear_state.hpp"

namespace bcast {

namespace {

enum class CutKind { None, Packing, Independent, Irredundant };

// Prefix-cut discipline per kind. A prefix already violating packing,
// independence, or irredundance cannot extend to a broadcast of that kind,
// because extensions only add hearers. Minimal dominating broadcasts are
// exactly the dominating broadcasts whose private borders are all nonempty,
// so the irredundance cut also applies to (dominating, minimal) searches.
CutKind cut_for(const ParameterSpec& spec) {
  switch (spec.kind) {
    case Kind::Packing: return CutKind::Packing;
    case Kind::Independent: return CutKind::Independent;
    case Kind::Irredundant: return CutKind::Irredundant;
    case Kind::Dominating:
      return spec.extremality == Extremality::Minimal ? CutKind::Irredundant
                                                      : CutKind::None;
  }
  return CutKind::None;
}

class ParamSearch {
 public:
  ParamSearch(const Graph& g, const ParameterSpec& spec,
              const SolveOptions& options)
      : g_(g), spec_(spec), n_(g.order()), guard_(options.node_guard), st_(g) {
    hi_.resize(n_);
    for (int v = 0; v < n_; ++v) hi_[v] = cap_value(g, spec.cap, v);
    suffix_.assign(n_ + 1, 0);
    for (int v = n_ - 1; v >= 0; --v) suffix_[v] = suffix_[v + 1] + hi_[v];
    cut_ = cut_for(spec);
  }

  std::uint64_t nodes() const { return nodes_; }

  // Exact optimum value plus the lexicographically smallest optimal witness.
  std::pair<int, Broadcast> run() {
    if (spec_.objective == Objective::Minimize) {
      for (int bound = 0; bound <= suffix_[0]; ++bound) {
        std::optional<std::vector<int>> hit = min_dfs(0, bound);
        if (hit) return {bound, Broadcast(std::move(*hit))};
      }
      throw InternalError("no feasible broadcast for the requested preset");
    }
    best_ = -1;
    max_value_dfs(0);
    if (best_ < 0)
      throw InternalError("no feasible broadcast for the requested preset");
    std::optional<std::vector<int>> witness = exact_cost_dfs(0, best_, nullptr);
    if (!witness) throw InternalError("optimal witness vanished between passes");
    return {best_, Broadcast(std::move(*witness))};
  }

  // Visits every optimum (exact cost = value) in lexicographic order.
  // The visitor returns false to stop.
  void visit_optima(int value, const std::function<bool(const Broadcast&)>& fn) {
    exact_cost_dfs(0, value, &fn);
  }

 private:
  void tick() {
    if (++nodes_ > guard_)
      throw ResourceLimitError(
          "solve exceeded its node guard (" + std::to_string(guard_) +
          " nodes); raise SolveOptions::node_guard to continue");
  }

  bool prefix_ok() const {
    switch (cut_) {
      case CutKind::Packing: return st_.packing_ok();
      case CutKind::Independent: return st_.independent_ok();
      case CutKind::Irredundant: return st_.irredundant_ok();
      case CutKind::None: return true;
    }
    return true;
  }

  bool leaf_kind_ok() const {
    switch (spec_.kind) {
      case Kind::Dominating: return st_.dominating();
      case Kind::Packing: return st_.packing_ok();
      case Kind::Independent: return st_.independent_ok();
      case Kind::Irredundant: return st_.irredundant_ok();
    }
    return false;
  }

  bool leaf_extremal_ok() {
    if (spec_.extremality == Extremality::None) return true;
    Broadcast f(st_.values());
    if (spec_.extremality == Extremality::Minimal)
      return is_minimal(g_, f, spec_.kind, spec_.cap, guard_);
    if (spec_.kind == Kind::Irredundant) {
      // The box search dominates the runtime; candidates recur across
      // deepening iterations, so memoize per candidate.
      auto it = maximal_memo_.find(f.values);
      if (it != maximal_memo_.end()) return it->second;
      bool ok = is_maximal(g_, f, spec_.kind, spec_.cap, guard_);
      maximal_memo_.emplace(f.values, ok);
      return ok;
    }
    return is_maximal(g_, f, spec_.kind, spec_.cap, guard_);
  }

  // Cost-bounded lexicographic DFS; first hit is the lexicographically
  // smallest candidate of cost <= bound. With iterative deepening the first
  // hit at the first feasible bound is the optimal witness.
  std::optional<std::vector<int>> min_dfs(int pos, int bound) {
    tick();
    if (pos == n_) {
      if (leaf_kind_ok() && leaf_extremal_ok()) return st_.values();
      return std::nullopt;
    }
    for (int k = 0; k <= hi_[pos]; ++k) {
      if (st_.cost() + k > bound) break;
      st_.assign(pos, k);
      if (prefix_ok()) {
        auto hit = min_dfs(pos + 1, bound);
        if (hit) {
          st_.unassign(pos);
          return hit;
        }
      }
      st_.unassign(pos);
    }
    return std::nullopt;
  }

  // Descending-value DFS maximizing candidate cost. The capacity cut uses
  // the best cost found so far.
  void max_value_dfs(int pos) {
    tick();
    if (pos == n_) {
      if (static_cast<int>(st_.cost()) > best_ && leaf_kind_ok() &&
          leaf_extremal_ok())
        best_ = st_.cost();
      return;
    }
    for (int k = hi_[pos]; k >= 0; --k) {
      if (best_ >= 0 && st_.cost() + k + suffix_[pos + 1] <= best_) break;
      st_.assign(pos, k);
      if (prefix_ok()) max_value_dfs(pos + 1);
      st_.unassign(pos);
    }
  }

  // Lexicographic DFS over candidates of cost exactly `value`. When `fn` is
  // null, returns the first candidate found; otherwise feeds every candidate
  // to `fn` until it returns false.
  std::optional<std::vector<int>> exact_cost_dfs(
      int pos, int value, const std::function<bool(const Broadcast&)>* fn) {
    stop_ = false;
    return exact_cost_rec(pos, value, fn);
  }

  std::optional<std::vector<int>> exact_cost_rec(
      int pos, int value, const std::function<bool(const Broadcast&)>* fn) {
    tick();
    if (pos == n_) {
      if (st_.cost() == value && leaf_kind_ok() && leaf_extremal_ok()) {
        if (!fn) return st_.values();
        if (!(*fn)(Broadcast(st_.values()))) stop_ = true;
      }
      return std::nullopt;
    }
    for (int k = 0; k <= hi_[pos]; ++k) {
      if (st_.cost() + k > value) break;
      if (st_.cost() + k + suffix_[pos + 1] < value) continue;
      st_.assign(pos, k);
      if (prefix_ok()) {
        auto hit = exact_cost_rec(pos + 1, value, fn);
        if (hit || stop_) {
          st_.unassign(pos);
          return hit;
        }
      }
      st_.unassign(pos);
    }
    return std::nullopt;
  }

  const Graph& g_;
  ParameterSpec spec_;
  int n_;
  std::uint64_t guard_;
  std::uint64_t nodes_ = 0;
  detail::HearState st_;
  std::vector<int> hi_;
  std::vector<int> suffix_;
  CutKind cut_ = CutKind::None;
  int best_ = -1;
  bool stop_ = false;
  std::map<std::vector<int>, bool> maximal_memo_;
};

}  // namespace

std::uint64_t enumerate_broadcasts(
    const Graph& g, Cap cap, const std::function<bool(const Broadcast&)>& visit,
    std::uint64_t node_guard) {
  const int n = g.order();
  long double space = 1.0L;
  std::vector<int> hi(n);
  for (int v = 0; v < n; ++v) {
    hi[v] = cap_value(g, cap, v);
    space *= hi[v] + 1;
  }
  if (space > static_cast<long double>(node_guard))
    throw ResourceLimitError("enumeration space exceeds the node guard");

  std::uint64_t visited = 0;
  std::vector<int> values(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, int pos) -> void {
    if (stop) return;
    if (pos == n) {
      ++visited;
      if (!visit(Broadcast(values))) stop = true;
      return;
    }
    for (int k = 0; k <= hi[pos] && !stop; ++k) {
      values[pos] = k;
      self(self, pos + 1);
    }
    values[pos] = 0;
  };
  rec(rec, 0);
  return visited;
}

SolveResult solve(const Graph& g, const ParameterSpec& spec,
                  const SolveOptions& options) {
  if (g.order() < 2) throw DomainError("solve requires order >= 2");
  auto start = std::chrono::steady_clock::now();
  ParamSearch search(g, spec, options);
  auto [value, witness] = search.run();

  SolveResult result;
  result.value = value;
  result.witness = std::move(witness);
  if (options.count_optima) {
    std::uint64_t count = 0;
    search.visit_optima(value, [&](const Broadcast&) {
      ++count;
      return true;
    });
    result.optimum_count = count;
  }
  result.nodes_explored = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult solve(const Graph& g, Parameter p, const SolveOptions& options) {
  return solve(g, spec_for(p), options);
}

WitnessList solve_all_witnesses(const Graph& g, const ParameterSpec& spec,
                                std::size_t limit,
                                const SolveOptions& options) {
  SolveResult optimum = solve(g, spec, options);
  ParamSearch search(g, spec, options);
  WitnessList out;
  search.visit_optima(optimum.value, [&](const Broadcast& f) {
    if (out.witnesses.size() >= limit) {
      out.truncated = true;
      return false;
    }
    out.witnesses.push_back(f);
    return true;
  });
  return out;
}

WitnessList solve_all_witnesses(const Graph& g, Parameter p, std::size_t limit,
                                const SolveOptions& options) {
  return solve_all_witnesses(g, spec_for(p), limit, options);
}

ChainReport chain_report(const Graph& g, const SolveOptions& options) {
  ChainReport report;
  for (Parameter p : kAllParameters)
    report.values[p] = solve(g, p, options).value;

  auto value = [&](Parameter p) { return report.values.at(p); };
  auto check = [&](const std::string& label, int lhs, int rhs) {
    bool holds = lhs <= rhs;
    report.checks.push_back({label, lhs, rhs, holds});
    if (!holds) report.all_hold = false;
  };
  using enum Parameter;
  check("ir_b <= gamma_b", value(ir_b), value(gamma_b));
  check("gamma_b <= gamma", value(gamma_b), value(gamma));
  check("gamma <= Gamma", value(gamma), value(Gamma));
  check("Gamma <= Gamma_b", value(Gamma), value(Gamma_b));
  check("Gamma_b <= IR_b", value(Gamma_b), value(IR_b));
  check("gamma_b <= i_b", value(gamma_b), value(i_b));
  check("i_b <= beta_b", value(i_b), value(beta_b));
  check("i <= beta_b", value(i), value(beta_b));
  check("gamma <= i", value(gamma), value(i));
  check("p <= P", value(p), value(P));
  check("P <= P_b", value(P), value(P_b));
  check("p_b <= rad", value(p_b), g.radius());
  check("rad <= diam", g.radius(), g.diameter());
  check("diam <= P_b", g.diameter(), value(P_b));
  check("P_b <= beta_b", value(P_b), value(beta_b));
  check("Gamma_b <= m", value(Gamma_b), g.size());
  check("Gamma_b <= n - min_degree", value(Gamma_b), g.order() - g.min_degree());

  if (!report.all_hold) {
    std::string failing;
    for (const auto& c : report.checks)
      if (!c.holds) failing += (failing.empty() ? "" : ", ") + c.label;
    throw InternalError("inequality chain violated: " + failing);
  }
  return report;
}

}  // namespace bcast
