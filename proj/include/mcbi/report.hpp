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

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcbi/candidates.hpp"
#include "mcbi/horton.hpp"
#include "mcbi/stats.hpp"

namespace mcbi {

/// M(G)|L: the MCB matroid of one graph restricted to a ground set of
/// candidate cycles. Subsets are given as sorted ground-set indices and
/// answers are memoized per subset.
class RestrictedMatroid {
 public:
  RestrictedMatroid(const MinimumCycleBasisOracle& oracle, std::span<const Cycle> ground)
      : oracle_(&oracle), ground_(ground) {}

  std::size_t ground_size() const noexcept { return ground_.size(); }

  bool independent(std::vector<std::size_t> ids) const {
    std::sort(ids.begin(), ids.end());
    if (auto it = memo_.find(ids); it != memo_.end()) return it->second;
    std::vector<Cycle> set;
    set.reserve(ids.size());
    for (std::size_t id : ids) set.push_back(ground_[id]);
    ++calls_;
    const bool ok = oracle_->is_independent(set);
    memo_.emplace(std::move(ids), ok);
    return ok;
  }

  std::size_t oracle_calls() const noexcept { return calls_; }

 private:
  const MinimumCycleBasisOracle* oracle_;
  std::span<const Cycle> ground_;
  mutable std::map<std::vector<std::size_t>, bool> memo_;
  mutable std::size_t calls_ = 0;
};

/// Everything a solve needs about one instance, computed once: per-graph
/// Horton oracles, the candidate list and the instance statistics.
class SolveContext {
 public:
  explicit SolveContext(const Instance& instance)
      : instance_(std::make_shared<const Instance>(instance)), candidates_(candidates_list(*instance_)) {
    stats_.k = instance_->graph_count();
    stats_.n = instance_->vertex_count();
    for (std::size_t i = 0; i < instance_->graph_count(); ++i) {
      oracles_.push_back(std::make_unique<MinimumCycleBasisOracle>(instance_->graph(i)));
      GraphStats s = graph_stats(instance_->graph(i), oracles_.back()->minimum_cycle_basis());
      s.name = instance_->name(i);
      stats_.delta = std::max(stats_.delta, s.max_degree);
      stats_.gamma = std::max(stats_.gamma, s.gamma);
      stats_.graphs.push_back(std::move(s));
    }
    for (const auto& oracle : oracles_) matroids_.emplace_back(*oracle, candidates_.cycles);
  }

  SolveContext(const SolveContext&) = delete;
  SolveContext& operator=(const SolveContext&) = delete;

  const Instance& instance() const noexcept { return *instance_; }
  const CandidateList& candidates() const noexcept { return candidates_; }
  const InstanceStats& stats() const noexcept { return stats_; }
  std::size_t graph_count() const noexcept { return oracles_.size(); }
  const MinimumCycleBasisOracle& oracle(std::size_t i) const { return *oracles_.at(i); }
  const RestrictedMatroid& matroid(std::size_t i) const { return matroids_.at(i); }

  /// Common independence of candidate indices in every restricted matroid.
  bool feasible(const std::vector<std::size_t>& ids) const {
    for (const auto& m : matroids_)
      if (!m.independent(ids)) return false;
    return true;
  }

  std::size_t oracle_calls() const noexcept {
    std::size_t total = 0;
    for (const auto& m : matroids_) total += m.oracle_calls();
    return total;
  }

 private:
  std::shared_ptr<const Instance> instance_;
  CandidateList candidates_;
  InstanceStats stats_;
  std::vector<std::unique_ptr<MinimumCycleBasisOracle>> oracles_;
  std::vector<RestrictedMatroid> matroids_;
};

struct SolveReport {
  std::vector<Cycle> solution;  // canonical order
  std::string method;
  bool approximate = false;
  std::optional<std::size_t> target;  // the decision threshold K, when given
  bool answer = true;                 // false only for a negative decision
  std::vector<MCBResult> witnesses;   // one minimum cycle basis per graph, each containing the solution
  InstanceStats stats;
  std::size_t candidate_count = 0;
  std::size_t oracle_calls = 0;
  std::size_t augmentations = 0;
  std::chrono::microseconds elapsed{0};

  std::size_t size() const noexcept { return solution.size(); }
};

namespace detail {

inline SolveReport make_report(const SolveContext& ctx, std::string method, std::vector<Cycle> solution,
                               std::chrono::steady_clock::time_point started) {
  SolveReport r;
  sort_canonical(solution);
  r.solution = std::move(solution);
  r.method = std::move(method);
  r.stats = ctx.stats();
  r.candidate_count = ctx.candidates().size();
  for (std::size_t i = 0; i < ctx.graph_count(); ++i) r.witnesses.push_back(ctx.oracle(i).witness_basis(r.solution));
  r.oracle_calls = ctx.oracle_calls();
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
  return r;
}

inline std::vector<Cycle> pick(const CandidateList& list, const std::vector<std::size_t>& ids) {
  std::vector<Cycle> out;
  for (std::size_t id : ids) out.push_back(list.cycles.at(id));
  return out;
}

}  // namespace detail

}  // namespace mcbi
