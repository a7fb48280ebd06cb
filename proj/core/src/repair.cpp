#include "bcast/repair.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "bcast/errors.hpp"
#include "bcast/formulas.hpp"

namespace bcast {

namespace {

std::vector<int> undominated_vertices(const Graph& g, const Broadcast& f) {
  auto cnt = hear_counts(g, f);
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u)
    if (cnt[u] == 0) out.push_back(u);
  return out;
}

std::string vertex(int v) { return "x" + std::to_string(v); }

// One shift of the cycle repair: the unique broadcaster heard by `u` (the
// dominated neighbor of an undominated vertex) moves one step toward u.
// Returns the shifted broadcast, or nullopt when u's configuration does not
// match (u heard more than once, or not at exact distance, or the target
// cell is occupied).
std::optional<std::pair<Broadcast, std::string>> try_cycle_shift(
    const Graph& g, const Broadcast& f, int undominated, int u) {
  const int n = g.order();
  auto hearer_list = hearers(g, f, u);
  if (hearer_list.size() != 1) return std::nullopt;
  int j = hearer_list[0];
  if (g.dist(j, u) != f.values[j]) return std::nullopt;
  // Step from j toward u along the geodesic.
  int forward = (j + 1) % n;
  int backward = (j + n - 1) % n;
  int w = g.dist(forward, u) < g.dist(backward, u) ? forward : backward;
  if (g.dist(w, u) != g.dist(j, u) - 1) return std::nullopt;
  if (f.values[w] != 0) return std::nullopt;

  Broadcast shifted = f;
  shifted.values[w] = f.values[j];
  shifted.values[j] = 0;
  std::string description = vertex(undominated) + " undominated: shift " +
                            vertex(j) + " (power " +
                            std::to_string(f.values[j]) + ") to " + vertex(w);
  return std::make_pair(std::move(shifted), std::move(description));
}

}  // namespace

RepairTrace repair_irredundant_cycle(const Graph& g, const Broadcast& f) {
  if (g.family() != GraphFamily::Cycle)
    throw DomainError("cycle repair requires a cycle");
  require_valid(g, f);
  if (!is_irredundant(g, f)) throw DomainError("broadcast is not irredundant");
  int optimum = formula_value(GraphFamily::Cycle, Parameter::IR_b, g.order());
  if (f.cost() != optimum)
    throw DomainError("cost " + std::to_string(f.cost()) +
                      " is not the maximum irredundant cost " +
                      std::to_string(optimum));

  RepairTrace trace;
  Broadcast current = f;
  auto open = undominated_vertices(g, current);
  while (!open.empty()) {
    std::optional<std::pair<Broadcast, std::string>> shift;
    for (std::size_t idx = 0; idx < open.size() && !shift; ++idx) {
      int i = open[idx];
      int n = g.order();
      shift = try_cycle_shift(g, current, i, (i + n - 1) % n);
      if (!shift) shift = try_cycle_shift(g, current, i, (i + 1) % n);
    }
    if (!shift)
      throw InternalError("cycle repair found no admissible shift");

    auto [next, description] = std::move(*shift);
    if (!validate(g, next) || !is_irredundant(g, next))
      throw InternalError("cycle repair step broke irredundance");
    if (next.cost() != current.cost())
      throw InternalError("cycle repair step changed the cost");
    auto next_open = undominated_vertices(g, next);
    if (next_open.size() >= open.size())
      throw InternalError("cycle repair step made no progress");
    auto cnt_before = hear_counts(g, current);
    auto cnt_after = hear_counts(g, next);
    for (int u = 0; u < g.order(); ++u)
      if (cnt_before[u] > 0 && cnt_after[u] == 0)
        throw InternalError("cycle repair step undominated a covered vertex");

    trace.steps.push_back({std::move(description), current, next});
    current = std::move(next);
    open = std::move(next_open);
  }

  if (!is_dominating(g, current) || !is_minimal(g, current, Kind::Dominating))
    throw InternalError("cycle repair result is not minimal dominating");
  trace.final = std::move(current);
  return trace;
}

namespace {

void require_path_ir_optimum(const Graph& g, const Broadcast& f) {
  if (g.family() != GraphFamily::Path)
    throw DomainError("path repair requires a path");
  require_valid(g, f);
  if (!is_irredundant(g, f)) throw DomainError("broadcast is not irredundant");
  int optimum = formula_value(GraphFamily::Path, Parameter::ir_b, g.order());
  if (f.cost() != optimum)
    throw DomainError("cost " + std::to_string(f.cost()) +
                      " is not the minimum maximal-irredundant cost " +
                      std::to_string(optimum));
}

void certify_maximal_irredundant(const Graph& g, const Broadcast& f,
                                 const char* stage) {
  if (!validate(g, f) || !is_irredundant(g, f) ||
      !is_maximal(g, f, Kind::Irredundant))
    throw InternalError(std::string(stage) +
                        " did not produce a maximal irredundant broadcast");
}

}  // namespace

Broadcast endpoint_repair_path(const Graph& g, const Broadcast& f) {
  require_path_ir_optimum(g, f);
  const int n = g.order();
  Broadcast h = f;
  auto cnt = hear_counts(g, h);

  // Left endpoint. Every hearer of x1 sits to the right at exact distance,
  // otherwise x0 would be dominated; shifting the closest one left by one
  // step dominates x0.
  if (cnt[0] == 0) {
    if (cnt[1] == 0)
      throw DomainError("x1 undominated: input is not maximal irredundant");
    auto hearer_list = hearers(g, h, 1);
    int j = hearer_list.front();
    if (j < 2 || g.dist(1, j) != h.values[j])
      throw InternalError("endpoint repair: unexpected dominator layout");
    if (h.values[j - 1] != 0)
      throw DomainError("endpoint repair: target vertex already broadcasts");
    h.values[j - 1] = h.values[j];
    h.values[j] = 0;
    certify_maximal_irredundant(g, h, "left endpoint repair");
    cnt = hear_counts(g, h);
    if (cnt[0] == 0)
      throw InternalError("left endpoint repair left x0 undominated");
  }

  // Right endpoint, mirrored.
  if (cnt[n - 1] == 0) {
    if (cnt[n - 2] == 0)
      throw DomainError("x(n-2) undominated: input is not maximal irredundant");
    auto hearer_list = hearers(g, h, n - 2);
    int j = hearer_list.back();
    if (j > n - 3 || g.dist(n - 2, j) != h.values[j])
      throw InternalError("endpoint repair: unexpected dominator layout");
    if (h.values[j + 1] != 0)
      throw DomainError("endpoint repair: target vertex already broadcasts");
    h.values[j + 1] = h.values[j];
    h.values[j] = 0;
    certify_maximal_irredundant(g, h, "right endpoint repair");
    cnt = hear_counts(g, h);
    if (cnt[0] == 0 || cnt[n - 1] == 0)
      throw InternalError("right endpoint repair undominated an endpoint");
  }

  if (h.cost() != f.cost())
    throw InternalError("endpoint repair changed the cost");
  return h;
}

RepairTrace repair_irredundant_path(const Graph& g, const Broadcast& f) {
  require_path_ir_optimum(g, f);
  const int n = g.order();
  {
    auto cnt = hear_counts(g, f);
    if (cnt[0] == 0 || cnt[1] == 0 || cnt[n - 2] == 0 || cnt[n - 1] == 0)
      throw DomainError(
          "path repair requires dominated endpoints; apply "
          "endpoint_repair_path first");
  }

  RepairTrace trace;
  Broadcast current = f;
  auto open = undominated_vertices(g, current);
  while (!open.empty()) {
    int i = open.front();  // leftmost undominated vertex
    auto cnt = hear_counts(g, current);

    // The dominator of x(i-1) reaches it exactly from the left.
    auto hearer_list = hearers(g, current, i - 1);
    if (hearer_list.size() != 1)
      throw DomainError("path repair: x" + std::to_string(i - 1) +
                        " is dominated more than once");
    int j = hearer_list[0];
    if (j > i - 2 || g.dist(j, i - 1) != current.values[j])
      throw InternalError("path repair: dominator not at exact distance");

    // The closest broadcast vertex to the left of the dominator, and its
    // left-side bordering private neighbor.
    int jl = -1;
    for (int v = j - 1; v >= 0; --v)
      if (current.values[v] > 0) {
        jl = v;
        break;
      }
    if (jl < 0)
      throw DomainError("path repair: dominator is the leftmost broadcaster");
    auto border = private_border(g, current, jl);
    int jlp = jl - current.values[jl];
    if (std::find(border.begin(), border.end(), jlp) == border.end())
      throw DomainError(
          "path repair: no left-side bordering private neighbor");
    if (g.dist(jlp, j) != current.values[j] + 1)
      throw DomainError("path repair: dominator spacing violates maximality");
    if (current.values[jl] != 1)
      throw DomainError("path repair: cost conservation needs power 1 here");

    int target = cnt[i + 1] > 0 ? j + 1 : j + 2;
    if (current.values[target] != 0)
      throw DomainError("path repair: target vertex already broadcasts");

    Broadcast next = current;
    next.values[j] = 0;
    if (jl != jlp + 1) {
      next.values[jlp + 1] = 1;
      next.values[jl] = 0;
    }
    next.values[target] = current.values[j];

    certify_maximal_irredundant(g, next, "path repair step");
    if (next.cost() != current.cost())
      throw InternalError("path repair step changed the cost");
    auto next_open = undominated_vertices(g, next);
    if (next_open.size() >= open.size())
      throw InternalError("path repair step made no progress");
    if (!next_open.empty() && next_open.front() <= i)
      throw InternalError("path repair step left x" + std::to_string(i) +
                          " undominated");

    std::string description = vertex(i) + " undominated: move " + vertex(j) +
                              " (power " + std::to_string(current.values[j]) +
                              ") to " + vertex(target);
    trace.steps.push_back({std::move(description), current, next});
    current = std::move(next);
    open = std::move(next_open);
  }

  if (!is_dominating(g, current))
    throw InternalError("path repair result is not dominating");
  trace.final = std::move(current);
  return trace;
}

}  // namespace bcast
