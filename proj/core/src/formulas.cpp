#include "bcast/formulas.hpp"

#include <string>

#include "bcast/errors.hpp"

namespace bcast {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_family(GraphFamily family) {
  if (family != GraphFamily::Path && family != GraphFamily::Cycle)
    throw DomainError("closed forms exist for paths and cycles only");
}

int p_b_value(int n) {
  int q = n / 8;
  switch (n % 8) {
    case 0: return n / 4;
    case 1:
    case 2:
    case 3: return 2 * q + 1;
    default: return 2 * q + 2;
  }
}

}  // namespace

int formula_min_order(GraphFamily family, Parameter p) {
  require_family(family);
  if (!is_broadcast_parameter(p))
    throw DomainError("no closed form for classical parameters");
  return family == GraphFamily::Path ? 2 : 3;
}

bool has_formula(GraphFamily family, Parameter p) {
  return (family == GraphFamily::Path || family == GraphFamily::Cycle) &&
         is_broadcast_parameter(p);
}

int formula_value(GraphFamily family, Parameter p, int n) {
  int guard = formula_min_order(family, p);
  if (n < guard)
    throw DomainError("order " + std::to_string(n) + " below the guard " +
                      std::to_string(guard));
  bool path = family == GraphFamily::Path;
  switch (p) {
    case Parameter::gamma_b:
    case Parameter::ir_b:
      return ceil_div(n, 3);
    case Parameter::i_b:
      return n == 3 ? 1 : ceil_div(2 * n, 5);
    case Parameter::p_b:
      return p_b_value(n);
    case Parameter::Gamma_b:
    case Parameter::IR_b:
      if (path) return n - 1;
      return n == 3 ? 1 : 2 * (n / 2 - 1);
    case Parameter::beta_b:
      if (path) return n == 2 ? 1 : 2 * (n - 2);
      // Cross-checked by brute force (beta_b(C_5) = 2, not 3).
      return n == 3 ? 1 : 2 * (n / 2 - 1);
    case Parameter::P_b:
      return path ? n - 1 : n / 2;
    default:
      throw DomainError("no closed form for classical parameters");
  }
}

}  // namespace bcast
