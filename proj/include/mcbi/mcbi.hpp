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

#include "mcbi/bitvec.hpp"
#include "mcbi/bruteforce.hpp"
#include "mcbi/budget.hpp"
#include "mcbi/candidates.hpp"
#include "mcbi/cycle_space.hpp"
#include "mcbi/errors.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/horton.hpp"
#include "mcbi/instances.hpp"
#include "mcbi/io.hpp"
#include "mcbi/report.hpp"
#include "mcbi/shortest_paths.hpp"
#include "mcbi/solver.hpp"
#include "mcbi/special_cases.hpp"
#include "mcbi/stats.hpp"
