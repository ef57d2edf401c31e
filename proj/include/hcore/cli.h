// Copyright 2026 The hcore Authors
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

#ifndef HCORE_CLI_H_
#define HCORE_CLI_H_

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

#include "hcore/graph.h"
#include "hcore/lp.h"

namespace hcore {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

// Named graph or edge-list file.
Graph resolve_graph(const std::string& spec);

struct CrosscheckResult {
  mpq_class total_probability;
  // rows . p - rhs for the four LP rows, indexed like LPProblem::rows.
  std::vector<mpq_class> row_residuals;
  mpq_class alpha_from_views;
  mpq_class alpha_from_graph;
  int support_size = 0;

  bool ok() const;
};

// Needs a cubic graph on at most 16 vertices with girth >= 4.
CrosscheckResult crosscheck(const Graph& g, const mpq_class& lambda);

struct LpSpotCheck {
  GirthClass cls;
  Sense sense;
  mpq_class lambda;
  std::string graph;  // named graph whose occupancy is the expected optimum
};

std::vector<LpSpotCheck> lp_spot_checks();

// x rounded to `digits` significant digits.
std::string FormatSignificant(double x, int digits);

}  // namespace hcore

#endif  // HCORE_CLI_H_
