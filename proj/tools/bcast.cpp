#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bcast/constructions.hpp"
#include "bcast/errors.hpp"
#include "bcast/repair.hpp"
#include "bcast/solver.hpp"
#include "verify_lib.hpp"

namespace {

using bcast::Broadcast;
using bcast::Graph;
using bcast::GraphFamily;
using bcast::Parameter;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bcast::SolveOptions solve_options() {
  bcast::SolveOptions options;
  if (const char* raw = std::getenv("BCAST_SEARCH_GUARD")) {
    try {
      options.node_guard = std::stoull(raw);
    } catch (const std::exception&) {
      throw UsageError("BCAST_SEARCH_GUARD is not an unsigned integer");
    }
  }
  return options;
}

Graph resolve_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("graph spec must be path:N, cycle:N, mr:R, or file:PATH");
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (head == "file") return Graph::load_edge_list(rest);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw UsageError("graph spec '" + spec + "' has a non-numeric argument");
  }
  if (head == "path") return Graph::path(value);
  if (head == "cycle") return Graph::cycle(value);
  if (head == "mr") return Graph::mynhardt_roux(value);
  throw UsageError("unknown graph family '" + head + "'");
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "path") return GraphFamily::Path;
  if (name == "cycle") return GraphFamily::Cycle;
  throw UsageError("family must be 'path' or 'cycle'");
}

Parameter parameter_from_cli(const std::string& name) {
  auto p = bcast::parameter_from_name(name);
  if (!p) throw UsageError("unknown parameter '" + name + "' (names are case-sensitive)");
  return *p;
}

std::vector<Parameter> parameter_set(const std::string& set) {
  using bcast::kAllParameters;
  using bcast::kBroadcastParameters;
  using bcast::kClassicalParameters;
  if (set == "broadcast")
    return {kBroadcastParameters.begin(), kBroadcastParameters.end()};
  if (set == "classical")
    return {kClassicalParameters.begin(), kClassicalParameters.end()};
  if (set == "all") return {kAllParameters.begin(), kAllParameters.end()};
  throw UsageError("--set must be broadcast, classical, or all");
}

std::vector<Parameter> parse_param_list(const std::string& csv) {
  std::vector<Parameter> out;
  std::istringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    out.push_back(parameter_from_cli(token));
  }
  if (out.empty()) throw UsageError("--params given but empty");
  return out;
}

void check_range(GraphFamily family, int from, int to) {
  int guard = family == GraphFamily::Path ? 2 : 3;
  if (from < guard)
    throw UsageError("--from must be at least " + std::to_string(guard) +
                     " for this family");
  if (to < from) throw UsageError("--to must be at least --from");
}

// ---------------------------------------------------------------- table ---

struct TableArgs {
  std::string family;
  int from = 0;
  int to = 0;
  std::string set = "broadcast";
  std::string method = "formula";
  std::string format = "table";
};

int run_table(const TableArgs& args) {
  GraphFamily family = family_from_name(args.family);
  check_range(family, args.from, args.to);
  if (args.method != "formula" && args.method != "solve" && args.method != "both")
    throw UsageError("--method must be formula, solve, or both");
  if (args.format != "table" && args.format != "json" && args.format != "csv")
    throw UsageError("--format must be table, json, or csv");
  if (args.method != "solve" && args.set != "broadcast")
    throw UsageError("classical parameters have no closed form; use --method solve");

  std::vector<Parameter> params = parameter_set(args.set);
  bcast::SolveOptions options = solve_options();

  bool want_formula = args.method != "solve";
  bool want_solve = args.method != "formula";
  bool all_match = true;

  struct Cell {
    int formula = -1;
    int solved = -1;
    bool match = true;
  };
  std::vector<std::vector<Cell>> rows;
  for (int n = args.from; n <= args.to; ++n) {
    Graph g = family == GraphFamily::Path ? Graph::path(n) : Graph::cycle(n);
    std::vector<Cell> row;
    for (Parameter p : params) {
      Cell cell;
      if (want_formula) cell.formula = bcast::formula_value(family, p, n);
      if (want_solve) cell.solved = bcast::solve(g, p, options).value;
      if (want_formula && want_solve) {
        cell.match = cell.formula == cell.solved;
        if (!cell.match) all_match = false;
      }
      row.push_back(cell);
    }
    rows.push_back(std::move(row));
  }

  auto cell_text = [&](const Cell& cell) -> std::string {
    if (args.method == "formula") return std::to_string(cell.formula);
    if (args.method == "solve") return std::to_string(cell.solved);
    if (cell.match) return std::to_string(cell.formula);
    return std::to_string(cell.formula) + "!=" + std::to_string(cell.solved);
  };

  if (args.format == "json") {
    json out = json::array();
    for (int n = args.from; n <= args.to; ++n) {
      json row;
      row["n"] = n;
      const auto& cells = rows[n - args.from];
      for (std::size_t k = 0; k < params.size(); ++k) {
        const char* name = bcast::parameter_name(params[k]);
        if (args.method == "both") {
          row[name] = {{"formula", cells[k].formula},
                       {"solve", cells[k].solved},
                       {"match", cells[k].match}};
        } else {
          row[name] = args.method == "formula" ? cells[k].formula
                                               : cells[k].solved;
        }
      }
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "n";
    for (Parameter p : params) {
      const char* name = bcast::parameter_name(p);
      if (args.method == "both")
        std::cout << "," << name << "_formula," << name << "_solve," << name
                  << "_match";
      else
        std::cout << "," << name;
    }
    std::cout << "\n";
    for (int n = args.from; n <= args.to; ++n) {
      std::cout << n;
      for (const Cell& cell : rows[n - args.from]) {
        if (args.method == "both")
          std::cout << "," << cell.formula << "," << cell.solved << ","
                    << (cell.match ? "true" : "false");
        else
          std::cout << "," << cell_text(cell);
      }
      std::cout << "\n";
    }
  } else {
    std::vector<std::size_t> width(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
      width[k] = std::string(bcast::parameter_name(params[k])).size();
      for (const auto& row : rows)
        width[k] = std::max(width[k], cell_text(row[k]).size());
    }
    std::cout << std::setw(4) << "n";
    for (std::size_t k = 0; k < params.size(); ++k)
      std::cout << "  " << std::setw(static_cast<int>(width[k]))
                << bcast::parameter_name(params[k]);
    std::cout << "\n";
    for (int n = args.from; n <= args.to; ++n) {
      std::cout << std::setw(4) << n;
      const auto& row = rows[n - args.from];
      for (std::size_t k = 0; k < params.size(); ++k)
        std::cout << "  " << std::setw(static_cast<int>(width[k]))
                  << cell_text(row[k]);
      std::cout << "\n";
    }
    if (args.method == "both")
      std::cout << (all_match ? "all rows match\n" : "MISMATCH detected\n");
  }
  return args.method == "both" && !all_match ? kExitMismatch : kExitOk;
}

// ---------------------------------------------------------------- solve ---

struct SolveArgs {
  std::string graph;
  std::string param;
  bool witness = false;
  bool all_witnesses = false;
  std::size_t limit = 64;
  std::string format = "table";
  bool timing = false;
};

int run_solve(const SolveArgs& args) {
  Graph g = resolve_graph(args.graph);
  Parameter p = parameter_from_cli(args.param);
  bcast::SolveOptions options = solve_options();
  bcast::SolveResult result = bcast::solve(g, p, options);

  bool has_formula = bcast::has_formula(g.family(), p) &&
                     g.order() >= bcast::formula_min_order(g.family(), p);
  int formula = has_formula
                    ? bcast::formula_value(g.family(), p, g.family_param())
                    : -1;

  bcast::WitnessList all;
  if (args.all_witnesses)
    all = bcast::solve_all_witnesses(g, p, args.limit, options);

  double elapsed_ms = result.elapsed.count() * 1000.0;
  if (args.format == "json") {
    json out;
    out["graph"] = args.graph;
    out["parameter"] = bcast::parameter_name(p);
    out["value"] = result.value;
    out["witness"] = bcast::format_broadcast(result.witness);
    out["formula_value"] = has_formula ? json(formula) : json(nullptr);
    out["match"] = has_formula ? json(formula == result.value) : json(nullptr);
    out["nodes_explored"] = result.nodes_explored;
    out["elapsed_ms"] = args.timing ? json(elapsed_ms) : json(nullptr);
    if (args.all_witnesses) {
      json list = json::array();
      for (const Broadcast& w : all.witnesses)
        list.push_back(bcast::format_broadcast(w));
      out["witnesses"] = std::move(list);
      out["truncated"] = all.truncated;
    }
    std::cout << out.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "graph,parameter,value,witness,formula_value,match,"
                 "nodes_explored,elapsed_ms\n";
    std::cout << args.graph << "," << bcast::parameter_name(p) << ","
              << result.value << "," << bcast::format_broadcast(result.witness)
              << ",";
    if (has_formula)
      std::cout << formula << "," << (formula == result.value ? "true" : "false");
    else
      std::cout << ",";
    std::cout << "," << result.nodes_explored << ",";
    if (args.timing) std::cout << elapsed_ms;
    std::cout << "\n";
  } else {
    std::cout << "graph:      " << args.graph << "\n";
    std::cout << "parameter:  " << bcast::parameter_name(p) << "\n";
    std::cout << "value:      " << result.value << "\n";
    if (args.witness || args.all_witnesses)
      std::cout << "witness:    " << bcast::format_broadcast(result.witness)
                << "\n";
    if (has_formula)
      std::cout << "formula:    " << formula
                << (formula == result.value ? " (match)" : " (MISMATCH)")
                << "\n";
    std::cout << "nodes:      " << result.nodes_explored << "\n";
    if (args.timing)
      std::cout << "elapsed:    " << std::fixed << std::setprecision(3)
                << elapsed_ms << " ms\n";
    if (args.all_witnesses) {
      std::cout << "optima:     " << all.witnesses.size()
                << (all.truncated ? "+ (truncated)" : "") << "\n";
      for (const Broadcast& w : all.witnesses)
        std::cout << "  " << bcast::format_broadcast(w) << "\n";
    }
  }
  if (has_formula && formula != result.value) return kExitMismatch;
  return kExitOk;
}

// --------------------------------------------------------------- verify ---

struct VerifyArgs {
  std::string family;
  int from = 0;
  int to = 0;
  std::string params;
  bool lemmas = false;
  bool fail_fast = false;
};

int run_verify(const VerifyArgs& args) {
  GraphFamily family = family_from_name(args.family);
  check_range(family, args.from, args.to);
  std::vector<Parameter> params;
  if (!args.params.empty()) params = parse_param_list(args.params);
  bcast::SolveOptions options = solve_options();

  int failures = 0;
  int passed = 0;
  auto report = [&](const std::vector<bcast::verify::Check>& checks) {
    for (const auto& check : checks) {
      if (check.ok) {
        ++passed;
        std::cout << "ok   " << check.label;
        if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
        std::cout << "\n";
      } else {
        ++failures;
        std::cout << "FAIL " << check.label << ": " << check.detail << "\n";
        if (args.fail_fast) return false;
      }
    }
    return true;
  };

  bool keep_going =
      report(bcast::verify::check_formulas_vs_solver(family, args.from, args.to,
                                                     params, options));
  if (keep_going)
    keep_going = report(bcast::verify::check_constructions(
        family, args.from, args.to, params, std::min(args.to, 10), options));
  if (keep_going && args.from <= 9)
    keep_going = report(bcast::verify::check_chains(
        family, args.from, std::min(args.to, 9), options));
  if (keep_going && args.lemmas)
    keep_going = report(bcast::verify::check_structural_lemmas(
        family, args.from, args.to, options));
  if (keep_going && args.lemmas)
    report(bcast::verify::check_repairs(family, args.from, args.to, options));

  std::cout << "verify: " << passed << " checks passed, " << failures
            << " failed\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------- witness ---

struct WitnessArgs {
  std::string family;
  std::string param;
  int n = 0;
  bool check_optimal = false;
  std::string format = "plain";
};

int run_witness(const WitnessArgs& args) {
  GraphFamily family = family_from_name(args.family);
  Parameter p = parameter_from_cli(args.param);
  if (args.check_optimal && args.n > 13)
    throw UsageError("--check-optimal is guarded to n <= 13");
  bcast::WitnessRecipe recipe;
  try {
    recipe = bcast::construct_witness(family, p, args.n);
  } catch (const bcast::DomainError& e) {
    throw UsageError(e.what());
  }

  int solved = -1;
  if (args.check_optimal) {
    Graph g = family == GraphFamily::Path ? Graph::path(args.n)
                                          : Graph::cycle(args.n);
    solved = bcast::solve(g, p, solve_options()).value;
  }

  if (args.format == "json") {
    json out;
    out["family"] = args.family;
    out["parameter"] = bcast::parameter_name(p);
    out["n"] = args.n;
    out["pattern"] = recipe.pattern;
    out["witness"] = bcast::format_broadcast(recipe.witness);
    out["cost"] = recipe.witness.cost();
    out["formula_value"] = bcast::formula_value(family, p, args.n);
    if (args.check_optimal) {
      out["solver_value"] = solved;
      out["optimal"] = solved == recipe.witness.cost();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << bcast::format_broadcast(recipe.witness) << "\n";
    if (args.check_optimal)
      std::cout << "check-optimal: solver value " << solved
                << (solved == recipe.witness.cost() ? " (match)" : " (MISMATCH)")
                << "\n";
  }
  return args.check_optimal && solved != recipe.witness.cost() ? kExitMismatch
                                                               : kExitOk;
}

// -------------------------------------------------------------- analyze ---

struct AnalyzeArgs {
  std::string graph;
  std::string broadcast;
  std::string extremality;
};

bcast::Kind kind_from_name(const std::string& name) {
  if (name == "dominating") return bcast::Kind::Dominating;
  if (name == "irredundant") return bcast::Kind::Irredundant;
  if (name == "independent") return bcast::Kind::Independent;
  if (name == "packing") return bcast::Kind::Packing;
  throw UsageError("unknown kind '" + name + "'");
}

int run_analyze(const AnalyzeArgs& args) {
  Graph g = resolve_graph(args.graph);
  Broadcast f = bcast::parse_broadcast(args.broadcast);
  bcast::AnalyzeOptions options;
  if (!args.extremality.empty()) {
    if (args.extremality == "all") {
      options.extremality_kinds = {
          bcast::Kind::Dominating, bcast::Kind::Irredundant,
          bcast::Kind::Independent, bcast::Kind::Packing};
    } else {
      std::istringstream stream(args.extremality);
      std::string token;
      while (std::getline(stream, token, ','))
        if (!token.empty()) options.extremality_kinds.push_back(kind_from_name(token));
    }
  }
  if (!bcast::validate(g, f)) throw UsageError("broadcast is not valid on this graph");
  bcast::AnalysisReport report = bcast::analyze(g, f, options);

  json out;
  out["graph"] = args.graph;
  out["broadcast"] = bcast::format_broadcast(f);
  out["cost"] = report.cost;
  out["broadcast_vertices"] = report.broadcast_vertices;
  out["hears"] = report.hears;
  out["coverage"] = report.coverage;
  out["undominated"] = report.undominated;
  json pn = json::object();
  json pb = json::object();
  for (const auto& [v, set] : report.private_neighborhoods)
    pn[std::to_string(v)] = set;
  for (const auto& [v, set] : report.private_borders)
    pb[std::to_string(v)] = set;
  out["private_neighborhoods"] = std::move(pn);
  out["private_borders"] = std::move(pb);
  out["kinds"] = {{"dominating", report.dominating},
                  {"irredundant", report.irredundant},
                  {"independent", report.independent},
                  {"packing", report.packing}};
  json extremality = json::object();
  for (const auto& [kind, flags] : report.extremality) {
    json entry;
    entry["minimal"] = flags.minimal ? json(*flags.minimal) : json(nullptr);
    entry["maximal"] = flags.maximal ? json(*flags.maximal) : json(nullptr);
    extremality[bcast::kind_name(kind)] = std::move(entry);
  }
  out["extremality"] = std::move(extremality);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact broadcast parameters on small graphs"};
  app.require_subcommand(1);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "closed-form and/or solver values over a range of orders");
  table->add_option("--family", table_args.family, "path or cycle")->required();
  table->add_option("--from", table_args.from, "first order")->required();
  table->add_option("--to", table_args.to, "last order")->required();
  table->add_option("--set", table_args.set, "broadcast|classical|all");
  table->add_option("--method", table_args.method, "formula|solve|both");
  table->add_option("--format", table_args.format, "table|json|csv");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "exact value of one parameter on one graph");
  solve->add_option("--graph", solve_args.graph,
                    "path:N | cycle:N | mr:R | file:PATH")->required();
  solve->add_option("--param", solve_args.param, "parameter name")->required();
  solve->add_flag("--witness", solve_args.witness, "print an optimal witness");
  solve->add_flag("--all-witnesses", solve_args.all_witnesses,
                  "print every optimal witness (up to --limit)");
  solve->add_option("--limit", solve_args.limit, "witness cap (default 64)");
  solve->add_option("--format", solve_args.format, "table|json|csv");
  solve->add_flag("--timing", solve_args.timing, "include wall-clock time");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "formulas vs solver, construction certificates, chains");
  verify->add_option("--family", verify_args.family, "path or cycle")->required();
  verify->add_option("--from", verify_args.from, "first order")->required();
  verify->add_option("--to", verify_args.to, "last order")->required();
  verify->add_option("--params", verify_args.params,
                     "comma-separated parameter names (overrides the default "
                     "per-order selection)");
  verify->add_flag("--lemmas", verify_args.lemmas,
                   "also run the structural-lemma and repair suites");
  verify->add_flag("--fail-fast", verify_args.fail_fast, "stop at first failure");

  WitnessArgs witness_args;
  CLI::App* witness = app.add_subcommand(
      "witness", "emit the explicit optimal construction");
  witness->add_option("--family", witness_args.family, "path or cycle")->required();
  witness->add_option("--param", witness_args.param, "parameter name")->required();
  witness->add_option("--n", witness_args.n, "order")->required();
  witness->add_flag("--check-optimal", witness_args.check_optimal,
                    "also solve and compare (n <= 13)");
  witness->add_option("--format", witness_args.format, "plain|json");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report for one broadcast on one graph (JSON)");
  analyze->add_option("--graph", analyze_args.graph,
                      "path:N | cycle:N | mr:R | file:PATH")->required();
  analyze->add_option("--broadcast", analyze_args.broadcast,
                      "broadcast text, e.g. 011000030")->required();
  analyze->add_option("--extremality", analyze_args.extremality,
                      "comma-separated kinds, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(table_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (witness->parsed()) return run_witness(witness_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bcast::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bcast::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bcast::ConnectivityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bcast::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const bcast::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
