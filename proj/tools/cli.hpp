// Copyright 2026 The mcbi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The mcbi command line. Exit codes: 0 success, 1 computed "no" (negative
// decision, infeasible solution), 2 usage / input / precondition errors,
// 3 enumeration budget refusals.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcbi/mcbi.hpp"

namespace mcbi::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, budget = 3 };

struct UsageError : Error {
  using Error::Error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string first_token(const std::string& text) {
  std::istringstream in(text);
  for (auto& line : mcbi::detail::read_lines(in)) return line.tokens.front();
  return {};
}

/// Instance or trajectory file; --frames is only meaningful for the latter.
inline Instance load_instance(const std::string& path, const std::string& frames) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  if (first_token(text) == "traj") {
    std::optional<FrameRange> range;
    if (!frames.empty()) range = parse_frame_range(frames);
    return parse_trajectory(in, range);
  }
  if (!frames.empty()) throw UsageError("--frames applies to trajectory files only");
  return parse_instance(in);
}

inline nlohmann::json cycles_json(const EdgeUniverse& universe, const std::vector<Cycle>& cycles) {
  nlohmann::json out = nlohmann::json::array();
  for (const Cycle& c : cycles) out.push_back(format_cycle(universe, c));
  return out;
}

inline nlohmann::json stats_json(const InstanceStats& s) {
  nlohmann::json graphs = nlohmann::json::array();
  for (const GraphStats& g : s.graphs)
    graphs.push_back({{"name", g.name},
                      {"edges", g.edges},
                      {"components", g.components},
                      {"max_degree", g.max_degree},
                      {"gamma", g.gamma},
                      {"nu", g.nu},
                      {"mcb_weight", g.mcb_weight}});
  return {{"k", s.k}, {"n", s.n}, {"delta", s.delta}, {"gamma", s.gamma}, {"graphs", graphs}};
}

inline nlohmann::json report_json(const Instance& instance, const SolveReport& r) {
  nlohmann::json stats = stats_json(r.stats);
  stats["candidates"] = r.candidate_count;
  stats["oracle_calls"] = r.oracle_calls;
  stats["augmentations"] = r.augmentations;
  nlohmann::json witnesses = nlohmann::json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    witnesses.push_back({{"graph", instance.name(i)},
                         {"size", r.witnesses[i].size()},
                         {"weight", r.witnesses[i].total_weight},
                         {"cycles", cycles_json(instance.universe(), r.witnesses[i].basis)}});
  return {{"schema", 1},
          {"size", r.size()},
          {"cycles", cycles_json(instance.universe(), r.solution)},
          {"method", r.method},
          {"approximate", r.approximate},
          {"K", r.target ? nlohmann::json(*r.target) : nlohmann::json(nullptr)},
          {"answer", r.answer},
          {"stats", stats},
          {"witnesses", witnesses}};
}

// Text reports are valid solution files: metadata lines are comments.
inline void print_report_text(std::ostream& out, const Instance& instance, const SolveReport& r) {
  out << "# method: " << r.method << '\n';
  out << "# approximate: " << (r.approximate ? "yes" : "no") << '\n';
  if (r.target) {
    out << "# K: " << *r.target << '\n';
    out << "# answer: " << (r.answer ? "yes" : "no") << '\n';
  }
  out << "# size: " << r.size() << '\n';
  for (const Cycle& c : r.solution) out << format_cycle(instance.universe(), c) << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum intersection of minimum cycle bases", "mcbi"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, frames, method = "auto", host_path;
  std::optional<std::size_t> target;
  std::size_t graph_index = 1, l = 4, n = 0, k = 1;
  double p = 0.5, perturb = 0.0;
  std::uint64_t seed = 0;
  bool json = false, group_matchings = false;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", instance_path, "Instance or trajectory file")->required();
  solve->add_option("--method", method, "Solver")
      ->check(CLI::IsMember({"auto", "k2", "greedy", "xp", "brute", "special"}));
  solve->add_option("--K", target, "Decision threshold (xp, auto)");
  solve->add_flag("--json", json, "Structured output");
  solve->add_option("--frames", frames, "Trajectory frames a..b (inclusive, 1-based)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("solution", solution_path)->required();
  verify_cmd->add_option("--frames", frames);

  auto* mcb = app.add_subcommand("mcb", "Minimum cycle basis of one graph");
  mcb->add_option("instance", instance_path)->required();
  mcb->add_option("--graph", graph_index, "Graph number (1-based)");
  mcb->add_flag("--json", json);
  mcb->add_option("--frames", frames);

  auto* cands = app.add_subcommand("candidates", "Candidate cycle list of the intersection graph");
  cands->add_option("instance", instance_path)->required();
  cands->add_flag("--json", json);
  cands->add_option("--frames", frames);

  auto* stats = app.add_subcommand("stats", "Instance parameters");
  stats->add_option("instance", instance_path)->required();
  stats->add_flag("--json", json);
  stats->add_option("--frames", frames);

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_conn = gen->add_subcommand("conn", "Two l-cycles joined by the connector gadget");
  gen_conn->add_option("--l", l)->check(CLI::IsMember({4, 5}));
  auto* gen_stable = gen->add_subcommand("stableset", "Stable-set reduction of a host graph");
  gen_stable->add_option("host", host_path, "Host graph file")->required();
  gen_stable->add_option("--l", l)->check(CLI::IsMember({4, 5}));
  gen_stable->add_flag("--group-matchings", group_matchings, "One graph per matching instead of per edge");
  auto* gen_random = gen->add_subcommand("random", "Seeded random trajectory");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--k", k)->check(CLI::PositiveNumber);
  gen_random->add_option("--perturb", perturb)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    if (*solve) {
      if (target && method != "xp" && method != "auto") throw UsageError("--K applies to --method xp or auto only");
      if (method == "xp" && !target) throw UsageError("--method xp requires --K");
      const Instance instance = detail::load_instance(instance_path, frames);
      const SolveContext ctx(instance);
      SolveReport report;
      if (method == "auto") report = solve_auto(ctx, target);
      else if (method == "k2") report = solve_k2(ctx);
      else if (method == "greedy") report = solve_greedy(ctx);
      else if (method == "xp") report = solve_xp(ctx, *target);
      else if (method == "brute") report = solve_bruteforce(ctx, EnumerationBudget::from_environment());
      else report = solve_special(ctx);
      if (json) out << detail::report_json(instance, report).dump(2) << '\n';
      else detail::print_report_text(out, instance, report);
      return report.answer ? ok : negative;
    }
    if (*verify_cmd) {
      const Instance instance = detail::load_instance(instance_path, frames);
      std::istringstream sol(detail::read_file(solution_path));
      const auto cycles = parse_solution(instance.universe(), sol);
      const Verdict v = verify(instance, cycles);
      if (v.feasible) {
        out << "feasible: " << cycles.size() << " cycles\n";
        return ok;
      }
      out << "infeasible: " << v.reason << '\n';
      return negative;
    }
    if (*mcb) {
      const Instance instance = detail::load_instance(instance_path, frames);
      if (graph_index < 1 || graph_index > instance.graph_count())
        throw UsageError("--graph must be in 1.." + std::to_string(instance.graph_count()));
      const MCBResult basis = minimum_cycle_basis(instance.graph(graph_index - 1));
      if (json) {
        nlohmann::json doc = {{"schema", 1},
                              {"graph", instance.name(graph_index - 1)},
                              {"size", basis.size()},
                              {"weight", basis.total_weight},
                              {"cycles", detail::cycles_json(instance.universe(), basis.basis)}};
        out << doc.dump(2) << '\n';
      } else {
        out << "# graph: " << instance.name(graph_index - 1) << '\n';
        out << "# size: " << basis.size() << '\n';
        out << "# weight: " << basis.total_weight << '\n';
        for (const Cycle& c : basis.basis) out << format_cycle(instance.universe(), c) << '\n';
      }
      return ok;
    }
    if (*cands) {
      const Instance instance = detail::load_instance(instance_path, frames);
      const CandidateList list = candidates_list(instance);
      if (json) {
        nlohmann::json items = nlohmann::json::array();
        for (std::size_t i = 0; i < list.size(); ++i)
          items.push_back({{"cycle", format_cycle(instance.universe(), list.cycles[i])},
                           {"weight", list.cycles[i].weight()},
                           {"origin", describe_origin(instance.universe(), list.origins[i])}});
        out << nlohmann::json({{"schema", 1}, {"size", list.size()}, {"candidates", items}}).dump(2) << '\n';
      } else {
        out << "# candidates: " << list.size() << '\n';
        for (std::size_t i = 0; i < list.size(); ++i)
          out << format_cycle(instance.universe(), list.cycles[i]) << "  # "
              << describe_origin(instance.universe(), list.origins[i]) << '\n';
      }
      return ok;
    }
    if (*stats) {
      const Instance instance = detail::load_instance(instance_path, frames);
      const InstanceStats s = instance_stats(instance);
      if (json) {
        nlohmann::json doc = detail::stats_json(s);
        doc["schema"] = 1;
        out << doc.dump(2) << '\n';
      } else {
        out << "k " << s.k << "\nn " << s.n << "\ndelta " << s.delta << "\ngamma " << s.gamma << '\n';
        for (const GraphStats& g : s.graphs)
          out << "graph " << g.name << " edges " << g.edges << " components " << g.components << " delta "
              << g.max_degree << " gamma " << g.gamma << " nu " << g.nu << " mcb_weight " << g.mcb_weight << '\n';
      }
      return ok;
    }
    if (*gen_conn) {
      write_instance(out, conn_gadget(l));
      return ok;
    }
    if (*gen_stable) {
      std::istringstream in(detail::read_file(host_path));
      const HostGraph host = parse_host(in);
      write_instance(out, stable_set_instance({host, l, group_matchings ? Grouping::per_matching : Grouping::per_edge}));
      return ok;
    }
    if (*gen_random) {
      write_instance(out, random_instance(n, p, k, perturb, seed));
      return ok;
    }
  } catch (const BudgetExceeded& e) {
    err << "mcbi: budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const std::exception& e) {
    err << "mcbi: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace mcbi::cli
