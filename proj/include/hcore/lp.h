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

#ifndef HCORE_LP_H_
#define HCORE_LP_H_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hcore/localview.h"

namespace hcore {

enum class Sense { kMax, kMin };

// max/min c.p subject to rows.p = rhs, p >= 0. For the configuration LPs
// row 0 is the normalisation and row t+1 is gamma^v_t - gamma^u_t.
struct LPProblem {
  Sense sense = Sense::kMax;
  mpq_class lambda;
  std::vector<Configuration> columns;
  std::vector<mpq_class> objective;
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;

  int num_columns() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

struct LPSolution {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  mpq_class value;
  std::vector<mpq_class> primal;
  // One value per row; for configuration LPs (Λ_p, Λ_0, Λ_1, Λ_2).
  std::vector<mpq_class> dual;
  std::vector<int> basis;
  int iterations = 0;
};

std::string StatusName(LPSolution::Status s);

LPProblem build_lp(GirthClass cls, const mpq_class& lambda, Sense sense);
LPProblem build_lp(const std::vector<Configuration>& columns,
                   const mpq_class& lambda, Sense sense);

// Two-phase dense tableau simplex with Bland's rule. On kOptimal the primal
// point, the duals and the value are checked against each other and against
// both feasibility systems; a failed check throws std::logic_error.
LPSolution solve_exact(const LPProblem& p);

// Columns whose dual constraint is tight (zero reduced cost).
std::vector<int> tight_support(const LPSolution& sol, const LPProblem& p);

// Rank over Q of the row matrix restricted to `cols`.
int constraint_rank(const LPProblem& p, const std::vector<int>& cols);

// Rank of a dense rational matrix.
int matrix_rank(std::vector<std::vector<mpq_class>> m);

}  // namespace hcore

#endif  // HCORE_LP_H_
