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

#include <cstddef>
#include <cstdlib>
#include <string>

#include "mcbi/errors.hpp"

namespace mcbi {

/// Limits for the exhaustive reference computations. Exceeding one raises
/// BudgetExceeded; nothing is ever silently truncated.
struct EnumerationBudget {
  std::size_t max_cycle_space_dimension = 5;
  std::size_t max_candidates = 20;
  std::size_t max_host_vertices = 7;

  /// Defaults overridden by MCBI_BUDGET_CYCLE_DIM, MCBI_BUDGET_CANDIDATES and
  /// MCBI_BUDGET_HOST_VERTICES.
  static EnumerationBudget from_environment() {
    EnumerationBudget b;
    override_from("MCBI_BUDGET_CYCLE_DIM", b.max_cycle_space_dimension);
    override_from("MCBI_BUDGET_CANDIDATES", b.max_candidates);
    override_from("MCBI_BUDGET_HOST_VERTICES", b.max_host_vertices);
    return b;
  }

 private:
  static void override_from(const char* name, std::size_t& field) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return;
    try {
      std::size_t pos = 0;
      const unsigned long long parsed = std::stoull(value, &pos);
      if (pos != std::string(value).size()) throw std::invalid_argument(name);
      field = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
      throw Error(std::string(name) + " must be a non-negative integer, got '" + value + "'");
    }
  }
};

}  // namespace mcbi
