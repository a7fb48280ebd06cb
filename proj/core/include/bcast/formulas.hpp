#pragma once

#include "bcast/graph.hpp"
#include "bcast/parameters.hpp"

namespace bcast {

/// Smallest order the closed forms cover: 2 for paths, 3 for cycles.
int formula_min_order(GraphFamily family, Parameter p);

/// True when a closed form exists: paths/cycles, broadcast parameters only.
bool has_formula(GraphFamily family, Parameter p);

/// Closed-form value of a broadcast parameter on P_n or C_n.
///
///   gamma_b = ir_b = ceil(n/3)                 (both families)
///   i_b     = ceil(2n/5), except i_b = 1 at n = 3
///   p_b     = n/4          if n = 0 (mod 8)
///             2*floor(n/8)+1 if n = 1,2,3 (mod 8)
///             2*floor(n/8)+2 otherwise        (both families)
///   Gamma_b = IR_b = n-1 on paths; on cycles 1 at n = 3, else 2(floor(n/2)-1)
///   beta_b  = 2(n-2) on paths (1 at n = 2);
///             on cycles 1 at n = 3, else 2(floor(n/2)-1)
///   P_b     = n-1 on paths, floor(n/2) on cycles
///
/// Every entry is cross-checked against the exhaustive solver by the
/// verification suites; the cycle beta_b form and the n = 3 exceptions are
/// pinned by that brute force (e.g. beta_b(C_5) = 2).
///
/// Classical parameters have no closed form here and throw DomainError, as
/// do orders below the guard and families other than Path/Cycle.
int formula_value(GraphFamily family, Parameter p, int n);

}  // namespace bcast
