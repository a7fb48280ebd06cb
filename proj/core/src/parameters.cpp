#include "bcast/parameters.hpp"

#include "bcast/errors.hpp"

namespace bcast {

ParameterSpec spec_for(Parameter p) {
  using enum Kind;
  using enum Objective;
  using enum Extremality;
  switch (p) {
    case Parameter::gamma_b: return {Dominating, Minimize, None, Cap::Eccentricity};
    case Parameter::Gamma_b: return {Dominating, Maximize, Minimal, Cap::Eccentricity};
    case Parameter::ir_b:    return {Irredundant, Minimize, Maximal, Cap::Eccentricity};
    case Parameter::IR_b:    return {Irredundant, Maximize, None, Cap::Eccentricity};
    case Parameter::i_b:     return {Independent, Minimize, Maximal, Cap::Eccentricity};
    case Parameter::beta_b:  return {Independent, Maximize, None, Cap::Eccentricity};
    case Parameter::p_b:     return {Packing, Minimize, Maximal, Cap::Eccentricity};
    case Parameter::P_b:     return {Packing, Maximize, None, Cap::Eccentricity};
    case Parameter::gamma:   return {Dominating, Minimize, None, Cap::One};
    case Parameter::Gamma:   return {Dominating, Maximize, Minimal, Cap::One};
    case Parameter::ir:      return {Irredundant, Minimize, Maximal, Cap::One};
    case Parameter::IR:      return {Irredundant, Maximize, None, Cap::One};
    case Parameter::i:       return {Independent, Minimize, Maximal, Cap::One};
    case Parameter::beta0:   return {Independent, Maximize, None, Cap::One};
    case Parameter::p:       return {Packing, Minimize, Maximal, Cap::One};
    case Parameter::P:       return {Packing, Maximize, None, Cap::One};
  }
  throw DomainError("unknown parameter");
}

const char* parameter_name(Parameter p) {
  switch (p) {
    case Parameter::gamma_b: return "gamma_b";
    case Parameter::Gamma_b: return "Gamma_b";
    case Parameter::ir_b:    return "ir_b";
    case Parameter::IR_b:    return "IR_b";
    case Parameter::i_b:     return "i_b";
    case Parameter::beta_b:  return "beta_b";
    case Parameter::p_b:     return "p_b";
    case Parameter::P_b:     return "P_b";
    case Parameter::gamma:   return "gamma";
    case Parameter::Gamma:   return "Gamma";
    case Parameter::ir:      return "ir";
    case Parameter::IR:      return "IR";
    case Parameter::i:       return "i";
    case Parameter::beta0:   return "beta0";
    case Parameter::p:       return "p";
    case Parameter::P:       return "P";
  }
  return "?";
}

std::optional<Parameter> parameter_from_name(std::string_view name) {
  for (Parameter p : kAllParameters)
    if (name == parameter_name(p)) return p;
  return std::nullopt;
}

bool is_broadcast_parameter(Parameter p) {
  return spec_for(p).cap == Cap::Eccentricity;
}

}  // namespace bcast
