#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcon/bounds.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/constructions.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/ledger.hpp"
#include "kcon/search.hpp"

namespace kcon::cli {

enum ExitCode : int { kSuccess = 0, kPropertyFails = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string render(const Rational& r) { return r.to_string() + " (~" + r.to_decimal() + ")"; }

// Graph input: graph6 on stdin by default; --in sniffs .g6/.edges; --format overrides both.
inline Graph read_graph(const std::string& path, const std::string& format, std::istream& in) {
  std::string fmt = format;
  if (fmt.empty()) {
    auto ends_with = [&](std::string_view suffix) {
      return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    fmt = ends_with(".edges") ? "edges" : "graph6";
  }
  std::ifstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
  }
  std::istream& src = path.empty() ? in : file;
  if (fmt == "edges") return from_edge_list_text(src);
  std::string line;
  while (std::getline(src, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return from_graph6(line);
  throw FormatError("graph6: no graph on input");
}

inline void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

inline std::uint64_t default_budget(std::uint64_t fallback) {
  if (const char* env = std::getenv("KCON_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("KCON_BUDGET is not a number");
    }
  }
  return fallback;
}

inline BoundKind kind_from(const std::string& text) {
  auto kind = parse_bound_kind(text);
  if (!kind) throw UsageError("unknown bound kind '" + text + "'");
  return *kind;
}

// Runs one command line; args excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for (k+1)-connected subgraphs and edge-count thresholds", "kcon"};
  app.require_subcommand(1);

  std::size_t n = 0, k = 0;
  std::string in_path, format, json_path, kind_text, gamma_text, mode_text, only_text;
  bool witness = false, normalized_flag = false, override_domain = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;

  auto* gen = app.add_subcommand("gen", "generate a graph");
  auto* gen_mader = gen->add_subcommand("mader", "extremal construction without (k+1)-connected subgraphs");
  gen->require_subcommand(1);
  gen_mader->add_option("--n", n, "vertex count")->required();
  gen_mader->add_option("--k", k, "connectivity parameter")->required();
  gen_mader->add_option("--format", format, "graph6|edges")->check(CLI::IsMember({"graph6", "edges"}));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "input file (.g6 or .edges); stdin when absent");
    sub->add_option("--format", format, "graph6|edges")->check(CLI::IsMember({"graph6", "edges"}));
  };

  auto* kappa = app.add_subcommand("kappa", "vertex connectivity and a minimum cut");
  add_input(kappa);

  auto* has_ksub = app.add_subcommand("has-ksub", "does the graph contain a (k+1)-connected subgraph");
  has_ksub->add_option("--k", k, "connectivity parameter")->required();
  has_ksub->add_flag("--witness", witness, "print a witness vertex set");
  add_input(has_ksub);

  auto* decompose = app.add_subcommand("decompose", "maximal (k+1)-connected vertex sets");
  decompose->add_option("--k", k, "connectivity parameter")->required();
  add_input(decompose);

  auto* bound = app.add_subcommand("bound", "exact edge thresholds");
  bound->add_option("--kind", kind_text, "bound kind")->required();
  auto* bound_n = bound->add_option("--n", n, "vertex count");
  auto* bound_k = bound->add_option("--k", k, "connectivity parameter");
  auto* bound_norm = bound->add_flag("--normalized", normalized_flag, "evaluate the normalized form at --gamma");
  bound->add_option("--gamma", gamma_text, "gamma = n/k as P/Q")->needs(bound_norm);

  auto* verify = app.add_subcommand("verify-theorem", "exhaustively verify a forcing bound");
  verify->add_option("--kind", kind_text, "bound kind")->required();
  auto* verify_matula = app.add_subcommand("verify-matula", "exhaustively verify the Matula bound");
  for (auto* sub : {verify, verify_matula}) {
    sub->add_option("--n", n, "vertex count")->required();
    sub->add_option("--k", k, "connectivity parameter")->required();
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "decision-procedure call budget");
    sub->add_flag("--override-domain", override_domain, "allow runs outside the validity domain");
    sub->add_option("--json", json_path, "write the report as JSON");
  }

  auto* search_max = app.add_subcommand("search-max", "maximum edges without a (k+1)-connected subgraph");
  search_max->add_option("--n", n, "vertex count")->required();
  search_max->add_option("--k", k, "connectivity parameter")->required();
  search_max->add_option("--mode", mode_text, "exhaustive|greedy")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  search_max->add_option("--seed", seed, "random seed (greedy)");
  search_max->add_option("--budget", budget, "decision-procedure call budget");
  search_max->add_option("--json", json_path, "write the report as JSON");

  auto* ledger_cmd = app.add_subcommand("ledger", "run the exact proof ledger");
  ledger_cmd->add_option("--only", only_text, "comma-separated check ids");
  ledger_cmd->add_option("--json", json_path, "write the report as JSON");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (gen_mader->parsed()) {
      auto g = mader_graph(n, k).graph;
      out << (format == "edges" ? to_edge_list(g) : to_graph6(g));
      return kSuccess;
    }
    if (kappa->parsed()) {
      auto g = read_graph(in_path, format, in);
      auto result = vertex_connectivity(g);
      out << "kappa: " << result.kappa << '\n';
      if (result.cut) {
        out << "separator: " << result.cut->separator.to_string() << '\n';
        out << "side_a: " << result.cut->side_a.to_string() << '\n';
        out << "side_b: " << result.cut->side_b.to_string() << '\n';
      } else {
        out << "separator: none (complete graph)\n";
      }
      return kSuccess;
    }
    if (has_ksub->parsed()) {
      auto g = read_graph(in_path, format, in);
      auto result = has_k_plus_1_connected_subgraph(g, k);
      out << (result.found ? "true" : "false") << '\n';
      if (witness && result.witness) out << "witness: " << result.witness->vertices.to_string() << '\n';
      return kSuccess;
    }
    if (decompose->parsed()) {
      auto g = read_graph(in_path, format, in);
      auto pieces = max_k_connected_pieces(g, k);
      out << "pieces: " << pieces.size() << '\n';
      for (const auto& p : pieces) out << p.vertices.to_string() << '\n';
      return kSuccess;
    }
    if (bound->parsed()) {
      const auto kind = kind_from(kind_text);
      if (normalized_flag) {
        if (gamma_text.empty()) throw UsageError("--normalized requires --gamma P/Q");
        const auto gamma = Rational::parse(gamma_text);
        out << "kind: " << to_string(kind) << '\n';
        out << "gamma: " << gamma.to_string() << '\n';
        out << "normalized threshold: " << render(normalized(gamma, kind)) << '\n';
        return kSuccess;
      }
      if (!*bound_n || !*bound_k) throw UsageError("bound needs --n and --k (or --normalized --gamma)");
      const auto t = threshold(kind, static_cast<long long>(n), static_cast<long long>(k));
      out << "kind: " << to_string(kind) << '\n';
      out << "reading: " << to_string(t.reading) << '\n';
      out << "domain: " << t.domain_text << " (" << to_string(t.domain) << ")\n";
      out << "threshold: " << render(t.value) << '\n';
      if (is_forcing(kind))
        out << "min_forcing_edges: "
            << min_forcing_edge_count(kind, static_cast<long long>(n), static_cast<long long>(k)) << '\n';
      return kSuccess;
    }
    if (verify->parsed() || verify_matula->parsed()) {
      const auto kind = verify->parsed() ? kind_from(kind_text) : BoundKind::MatulaLemma;
      search::SearchOptions opts;
      opts.budget = budget ? *budget : default_budget(search::kDefaultBudget);
      opts.jobs = jobs;
      opts.override_domain = override_domain;
      auto report = search::verify_forcing(kind, n, k, opts);
      out << search::to_text(report);
      if (!json_path.empty()) write_json(json_path, search::to_json(report));
      return report.verified ? kSuccess : kPropertyFails;
    }
    if (search_max->parsed()) {
      const auto mode = mode_text == "greedy" ? search::Mode::MaximizeGreedy : search::Mode::MaximizeExhaustive;
      search::SearchOptions opts;
      opts.seed = seed;
      opts.budget = budget ? *budget
                           : default_budget(mode == search::Mode::MaximizeGreedy ? search::kDefaultGreedyBudget
                                                                                  : search::kDefaultBudget);
      auto report = search::max_edges_without(n, k, mode, opts);
      out << search::to_text(report);
      if (!json_path.empty()) write_json(json_path, search::to_json(report));
      return kSuccess;
    }
    if (ledger_cmd->parsed()) {
      std::vector<std::string> only;
      std::stringstream ss(only_text);
      for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) only.push_back(id);
      ledger::LedgerReport report;
      try {
        report = ledger::run_checks(ledger::standard_checks(), only);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << ledger::to_text(report);
      if (!json_path.empty()) write_json(json_path, ledger::to_json(report));
      return report.all_passed() ? kSuccess : kPropertyFails;
    }
  } catch (const search::BudgetExceeded& e) {
    err << "kcon: refused: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "kcon: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kcon::cli
