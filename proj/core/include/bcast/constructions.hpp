#pragma once

#include <string>

#include "bcast/formulas.hpp"

namespace bcast {

/// An explicit optimal broadcast for (family, parameter, n) together with the
/// pattern that produced it. Certified before return: the broadcast is valid,
/// has the parameter's kind and extremality, and costs exactly
/// formula_value(family, parameter, n). A certification failure throws
/// InternalError, signalling a transcription bug rather than bad input.
struct WitnessRecipe {
  GraphFamily family;
  Parameter parameter;
  int n = 0;
  std::string pattern;
  Broadcast witness;
};

/// Patterns in use:
///   i_b   - words over {0,1} built from 01010 blocks (both families)
///   p_b   - words built from 00100100 blocks; small cycles use
///           010, 2000, 20000, 001001
///   Gamma_b/IR_b on cycles - power floor(n/2)-1 at the two central positions
///   beta_b on cycles       - power floor(n/2)-1 at two antipodal positions
///   beta_b on paths        - power n-2 at both endpoints
///   P_b                    - a single full-power vertex
///   gamma_b, ir_b, Gamma_b/IR_b on paths - certified plumbing patterns
///                            (1s every third vertex, or one endpoint at n-1)
WitnessRecipe construct_witness(GraphFamily family, Parameter p, int n);

}  // namespace bcast
