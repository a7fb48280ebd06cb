#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bcast/broadcast.hpp"

namespace bcast {

enum class Objective { Minimize, Maximize };
enum class Extremality { None, Minimal, Maximal };

/// One optimization problem over broadcasts: a kind, an objective, an
/// extremality filter on the feasible set, and the value cap.
struct ParameterSpec {
  Kind kind;
  Objective objective;
  Extremality extremality;
  Cap cap;
};

/// The eight broadcast parameters and their classical 0/1 counterparts.
enum class Parameter {
  gamma_b,  // min cost of a dominating broadcast
  Gamma_b,  // max cost of a minimal dominating broadcast
  ir_b,     // min cost of a maximal irredundant broadcast
  IR_b,     // max cost of an irredundant broadcast
  i_b,      // min cost of a maximal independent broadcast
  beta_b,   // max cost of an independent broadcast
  p_b,      // min cost of a maximal packing broadcast
  P_b,      // max cost of a packing broadcast
  gamma,    // the same eight restricted to 0/1 broadcasts, i.e. vertex sets
  Gamma,
  ir,
  IR,
  i,
  beta0,
  p,
  P,
};

inline constexpr std::array<Parameter, 16> kAllParameters = {
    Parameter::gamma_b, Parameter::ir_b, Parameter::i_b,  Parameter::p_b,
    Parameter::Gamma_b, Parameter::IR_b, Parameter::beta_b, Parameter::P_b,
    Parameter::gamma,   Parameter::ir,   Parameter::i,    Parameter::p,
    Parameter::Gamma,   Parameter::IR,   Parameter::beta0, Parameter::P};

inline constexpr std::array<Parameter, 8> kBroadcastParameters = {
    Parameter::gamma_b, Parameter::ir_b, Parameter::i_b,  Parameter::p_b,
    Parameter::Gamma_b, Parameter::IR_b, Parameter::beta_b, Parameter::P_b};

inline constexpr std::array<Parameter, 8> kClassicalParameters = {
    Parameter::gamma, Parameter::ir, Parameter::i,     Parameter::p,
    Parameter::Gamma, Parameter::IR, Parameter::beta0, Parameter::P};

ParameterSpec spec_for(Parameter p);

/// Plain-text names, case-sensitive: gamma_b, Gamma_b, ir_b, IR_b, i_b,
/// beta_b, p_b, P_b, gamma, Gamma, ir, IR, i, beta0, p, P.
const char* parameter_name(Parameter p);
std::optional<Parameter> parameter_from_name(std::string_view name);

bool is_broadcast_parameter(Parameter p);  // cap = eccentricity

}  // namespace bcast
