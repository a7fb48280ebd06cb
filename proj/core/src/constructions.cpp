#include "bcast/constructions.hpp"

#include <string>

#include "bcast/errors.hpp"

namespace bcast {

namespace {

std::string repeat(const std::string& block, int q) {
  std::string out;
  out.reserve(block.size() * q);
  for (int k = 0; k < q; ++k) out += block;
  return out;
}

Broadcast word(const std::string& w) { return parse_broadcast(w); }

Broadcast zeros_with(int n, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<int> values(n, 0);
  for (auto [v, power] : entries) values[v] = power;
  return Broadcast(std::move(values));
}

// Maximal independent broadcasts over {0,1} built from 01010 blocks.
Broadcast i_b_word(int n) {
  switch (n) {
    case 2: return word("10");
    case 3: return word("010");
    case 4: return word("0101");
    default: break;
  }
  static const char* suffix[5] = {"", "1", "10", "101", "0101"};
  return word(repeat("01010", n / 5) + suffix[n % 5]);
}

// Maximal packing broadcasts built from 00100100 blocks.
Broadcast p_b_path_word(int n) {
  static const char* small[9] = {"",       "",        "10",      "010",
                                 "1001",   "01001",   "001001",  "0010010",
                                 "00100100"};
  if (n <= 8) return word(small[n]);
  static const char* suffix[8] = {"",     "1",     "10",     "100",
                                  "1001", "01001", "001001", "0010010"};
  return word(repeat("00100100", n / 8) + suffix[n % 8]);
}

Broadcast p_b_cycle_word(int n) {
  switch (n) {
    case 3: return word("010");
    case 4: return word("2000");
    case 5: return word("20000");
    case 6: return word("001001");
    default: return p_b_path_word(n);
  }
}

// Dominating 1s at every third position (1-based positions 2, 5, 8, ...),
// with an extra 1 on the last vertex when n = 1 (mod 3).
Broadcast ones_every_third(int n) {
  std::vector<int> values(n, 0);
  for (int v = 1; v < n; v += 3) values[v] = 1;
  if (n % 3 == 1) values[n - 1] = 1;
  return Broadcast(std::move(values));
}

Broadcast build(GraphFamily family, Parameter p, int n, std::string& pattern) {
  bool path = family == GraphFamily::Path;
  switch (p) {
    case Parameter::gamma_b:
      pattern = "plumbing";
      return ones_every_third(n);
    case Parameter::ir_b:
      if (!path && n <= 5) {
        pattern = "word";
        return word(n == 3 ? "010" : n == 4 ? "0200" : "00200");
      }
      pattern = "plumbing";
      return ones_every_third(n);
    case Parameter::i_b:
      pattern = "word";
      return i_b_word(n);
    case Parameter::p_b:
      pattern = "word";
      return path ? p_b_path_word(n) : p_b_cycle_word(n);
    case Parameter::Gamma_b:
    case Parameter::IR_b:
      if (path) {
        pattern = "plumbing";
        return zeros_with(n, {{0, n - 1}});
      }
      pattern = "two-vertex";
      if (n == 3) return zeros_with(n, {{0, 1}});
      return zeros_with(n, {{n / 2, n / 2 - 1}, {((n + 1) / 2 + 1) % n, n / 2 - 1}});
    case Parameter::beta_b:
      if (path) {
        pattern = "plumbing";
        if (n == 2) return word("10");
        return zeros_with(n, {{0, n - 2}, {n - 1, n - 2}});
      }
      pattern = "antipodal-pair";
      if (n == 3) return zeros_with(n, {{0, 1}});
      if (n == 4) return word("1010");
      return zeros_with(n, {{0, n / 2 - 1}, {n / 2, n / 2 - 1}});
    case Parameter::P_b:
      pattern = "single-vertex";
      return zeros_with(n, {{0, path ? n - 1 : n / 2}});
    default:
      throw DomainError("no construction for classical parameters");
  }
}

void certify(const Graph& g, const WitnessRecipe& recipe) {
  const Broadcast& f = recipe.witness;
  auto fail = [&](const std::string& what) {
    throw InternalError("construction certification failed for " +
                        std::string(parameter_name(recipe.parameter)) + " at n=" +
                        std::to_string(recipe.n) + ": " + what);
  };
  if (!validate(g, f)) fail("invalid broadcast");
  if (f.cost() != formula_value(recipe.family, recipe.parameter, recipe.n))
    fail("cost differs from the closed form");

  ParameterSpec spec = spec_for(recipe.parameter);
  if (!has_kind(g, f, spec.kind)) fail("wrong kind");

  // Extremality via cheap certificates only; the exponential box search is
  // never run here.
  switch (recipe.parameter) {
    case Parameter::Gamma_b:
      if (!is_minimal(g, f, Kind::Dominating)) fail("not minimal dominating");
      break;
    case Parameter::ir_b:
      // A minimal dominating broadcast is a maximal irredundant broadcast,
      // so minimal domination certifies the extremality.
      if (!is_dominating(g, f)) fail("not dominating");
      if (!is_minimal(g, f, Kind::Dominating)) fail("not minimal dominating");
      break;
    case Parameter::i_b:
      if (!is_maximal(g, f, Kind::Independent)) fail("not maximal independent");
      break;
    case Parameter::p_b:
      if (!is_maximal(g, f, Kind::Packing)) fail("not maximal packing");
      break;
    default:
      break;  // no extremality filter
  }
}

}  // namespace

WitnessRecipe construct_witness(GraphFamily family, Parameter p, int n) {
  int guard = formula_min_order(family, p);  // validates family and parameter
  if (n < guard)
    throw DomainError("order " + std::to_string(n) + " below the guard " +
                      std::to_string(guard));
  WitnessRecipe recipe;
  recipe.family = family;
  recipe.parameter = p;
  recipe.n = n;
  recipe.witness = build(family, p, n, recipe.pattern);

  Graph g = family == GraphFamily::Path ? Graph::path(n) : Graph::cycle(n);
  certify(g, recipe);
  return recipe;
}

}  // namespace bcast
