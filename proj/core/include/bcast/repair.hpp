#pragma once

#include <string>
#include <vector>

#include "bcast/broadcast.hpp"

namespace bcast {

struct RepairStep {
  std::string description;
  Broadcast before;
  Broadcast after;
};

/// A sequence of certified cost-preserving rewrites; every step strictly
/// decreases the number of undominated vertices and `final` is dominating.
struct RepairTrace {
  std::vector<RepairStep> steps;
  Broadcast final;
};

/// Turns a maximum-cost irredundant broadcast on a cycle into a minimal
/// dominating broadcast of the same cost by shifting, for each undominated
/// region, the unique dominator bordering it one step toward it.
///
/// Requires: g is a cycle, f is irredundant with cost IR_b(C_n). A dominating
/// input returns an empty trace. Every step is certified at runtime
/// (irredundance, cost, progress); the final broadcast is additionally
/// certified minimal dominating.
RepairTrace repair_irredundant_cycle(const Graph& g, const Broadcast& f);

/// Shifts the dominator of the second (resp. second-to-last) vertex one step
/// outward so that an undominated path endpoint becomes dominated. Identity
/// when both endpoints are already dominated.
///
/// Requires: g is a path, f is a maximal irredundant broadcast with cost
/// ir_b(P_n). The output is certified maximal irredundant with equal cost and
/// both endpoints dominated.
Broadcast endpoint_repair_path(const Graph& g, const Broadcast& f);

/// Turns a minimum-cost maximal irredundant broadcast on a path with both
/// endpoint pairs dominated (apply endpoint_repair_path first) into a
/// dominating broadcast of equal cost by case rewrites around the leftmost
/// undominated vertex. Inputs outside the shape the rewrites expect (for
/// example, a dominator with no broadcast vertex to its left) raise
/// DomainError.
RepairTrace repair_irredundant_path(const Graph& g, const Broadcast& f);

}  // namespace bcast
