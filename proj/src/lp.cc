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

#include "hcore/lp.h"

#include <stdexcept>

namespace hcore {
namespace {

// Tableau in canonical form for a maximisation over columns 0..n_total-1.
class Tableau {
 public:
  Tableau(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
          std::vector<int> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<mpq_class>& rhs() const { return b_; }
  const mpq_class& at(int r, int c) const { return a_[r][c]; }

  void Pivot(int r, int c) {
    const mpq_class piv = a_[r][c];
    for (auto& x : a_[r]) x /= piv;
    b_[r] /= piv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const mpq_class f = a_[i][c];
      for (size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  void DropRow(int r) {
    a_.erase(a_.begin() + r);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  // Maximises cost.x over the allowed columns. Returns false if unbounded.
  bool Optimize(const std::vector<mpq_class>& cost,
                const std::vector<bool>& allowed, int* iterations) {
    const int n = static_cast<int>(cost.size());
    while (true) {
      // Bland: the lowest-index column with positive reduced profit enters.
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        if (!allowed[j] || IsBasic(j)) continue;
        mpq_class d = cost[j];
        for (int i = 0; i < rows(); ++i) d -= cost[basis_[i]] * a_[i][j];
        if (d > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        const mpq_class ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      ++*iterations;
    }
  }

  bool IsBasic(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> b_;
  std::vector<int> basis_;
};

// Solves M^T y = c for square nonsingular M (columns of the basis).
std::vector<mpq_class> SolveTransposed(const std::vector<std::vector<mpq_class>>& cols,
                                       const std::vector<mpq_class>& c) {
  const int m = static_cast<int>(cols.size());
  // Row k of the system: cols[k] . y = c[k].
  std::vector<std::vector<mpq_class>> aug(m, std::vector<mpq_class>(m + 1));
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) aug[k][i] = cols[k][i];
    aug[k][m] = c[k];
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular basis");
    std::swap(aug[piv], aug[col]);
    for (int r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const mpq_class f = aug[r][col] / aug[col][col];
      for (int j = col; j <= m; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  std::vector<mpq_class> y(m);
  for (int i = 0; i < m; ++i) y[i] = aug[i][m] / aug[i][i];
  return y;
}

mpq_class ReducedCost(const LPProblem& p, const std::vector<mpq_class>& y,
                      int j) {
  mpq_class d = p.objective[j];
  for (int i = 0; i < p.num_rows(); ++i) d -= y[i] * p.rows[i][j];
  return d;
}

void Certify(const LPProblem& p, const LPSolution& s) {
  const int n = p.num_columns();
  mpq_class obj = 0;
  for (int j = 0; j < n; ++j) {
    if (s.primal[j] < 0) throw std::logic_error("negative primal value");
    obj += p.objective[j] * s.primal[j];
  }
  for (int i = 0; i < p.num_rows(); ++i) {
    mpq_class lhs = 0;
    for (int j = 0; j < n; ++j) lhs += p.rows[i][j] * s.primal[j];
    if (lhs != p.rhs[i]) throw std::logic_error("primal row violated");
  }
  mpq_class dual_obj = 0;
  for (int i = 0; i < p.num_rows(); ++i) dual_obj += p.rhs[i] * s.dual[i];
  if (obj != s.value || dual_obj != s.value) {
    throw std::logic_error("duality gap is not zero");
  }
  for (int j = 0; j < n; ++j) {
    const mpq_class d = ReducedCost(p, s.dual, j);
    if ((p.sense == Sense::kMax && d > 0) || (p.sense == Sense::kMin && d < 0)) {
      throw std::logic_error("dual constraint violated at column " +
                             std::to_string(j));
    }
    if (s.primal[j] != 0 && d != 0) {
      throw std::logic_error("complementary slackness fails");
    }
  }
}

}  // namespace

std::string StatusName(LPSolution::Status s) {
  switch (s) {
    case LPSolution::Status::kOptimal:
      return "Optimal";
    case LPSolution::Status::kInfeasible:
      return "Infeasible";
    case LPSolution::Status::kUnbounded:
      return "Unbounded";
  }
  return "?";
}

LPProblem build_lp(const std::vector<Configuration>& columns,
                   const mpq_class& lambda, Sense sense) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  LPProblem p;
  p.sense = sense;
  p.lambda = lambda;
  p.columns = columns;
  p.rows.assign(4, {});
  p.rhs = {1, 0, 0, 0};
  const Scalar x(lambda);
  for (const auto& c : columns) {
    const ConfigFunctions f = config_functions(c);
    const mpq_class z = f.z.Eval(x).rational();
    p.objective.push_back(f.z_plus.Eval(x).rational() / z);
    p.rows[0].push_back(1);
    for (int t = 0; t < 3; ++t) {
      const mpq_class gv = f.gv_num[t].Eval(x).rational() / z;
      const mpq_class gu = f.gu_num[t].Eval(x).rational() / (3 * z);
      p.rows[t + 1].push_back(gv - gu);
    }
  }
  return p;
}

LPProblem build_lp(GirthClass cls, const mpq_class& lambda, Sense sense) {
  return build_lp(enumerate_configurations(cls), lambda, sense);
}

LPSolution solve_exact(const LPProblem& p) {
  const int m = p.num_rows();
  const int n = p.num_columns();
  LPSolution sol;
  // Columns 0..n-1 structural, n..n+m-1 artificial.
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + m));
  std::vector<mpq_class> b(m);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const int sign = p.rhs[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) a[i][j] = sign * p.rows[i][j];
    a[i][n + i] = 1;
    b[i] = sign * p.rhs[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(a), std::move(b), std::move(basis));

  std::vector<mpq_class> phase1(n + m, 0);
  for (int i = 0; i < m; ++i) phase1[n + i] = -1;
  std::vector<bool> all(n + m, true);
  tab.Optimize(phase1, all, &sol.iterations);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] >= n && tab.rhs()[i] != 0) {
      sol.status = LPSolution::Status::kInfeasible;
      return sol;
    }
  }
  // Drive zero-level artificials out of the basis; drop redundant rows.
  std::vector<int> row_of(m);
  for (int i = 0; i < m; ++i) row_of[i] = i;
  for (int i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis()[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j) {
      if (tab.at(i, j) != 0) col = j;
    }
    if (col >= 0) {
      tab.Pivot(i, col);
    } else {
      tab.DropRow(i);
      row_of.erase(row_of.begin() + i);
    }
  }
  std::vector<mpq_class> cost(n + m, 0);
  for (int j = 0; j < n; ++j) {
    cost[j] = p.sense == Sense::kMax ? p.objective[j] : -p.objective[j];
  }
  std::vector<bool> structural(n + m, false);
  for (int j = 0; j < n; ++j) structural[j] = true;
  if (!tab.Optimize(cost, structural, &sol.iterations)) {
    sol.status = LPSolution::Status::kUnbounded;
    return sol;
  }

  sol.status = LPSolution::Status::kOptimal;
  sol.primal.assign(n, 0);
  for (int i = 0; i < tab.rows(); ++i) {
    sol.primal[tab.basis()[i]] = tab.rhs()[i];
    sol.basis.push_back(tab.basis()[i]);
  }
  sol.value = 0;
  for (int j = 0; j < n; ++j) sol.value += p.objective[j] * sol.primal[j];

  // Duals from B^T y = c_B on the surviving rows; dropped rows get 0.
  const int r = tab.rows();
  std::vector<std::vector<mpq_class>> bcols(r, std::vector<mpq_class>(r));
  std::vector<mpq_class> cb(r);
  for (int k = 0; k < r; ++k) {
    const int j = tab.basis()[k];
    for (int i = 0; i < r; ++i) bcols[k][i] = p.rows[row_of[i]][j];
    cb[k] = p.objective[j];
  }
  const std::vector<mpq_class> y = SolveTransposed(bcols, cb);
  sol.dual.assign(m, 0);
  for (int i = 0; i < r; ++i) sol.dual[row_of[i]] = y[i];
  Certify(p, sol);
  return sol;
}

std::vector<int> tight_support(const LPSolution& sol, const LPProblem& p) {
  if (sol.status != LPSolution::Status::kOptimal) {
    throw std::invalid_argument("tight_support needs an optimal solution");
  }
  std::vector<int> cols;
  for (int j = 0; j < p.num_columns(); ++j) {
    if (ReducedCost(p, sol.dual, j) == 0) cols.push_back(j);
  }
  return cols;
}

int matrix_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int constraint_rank(const LPProblem& p, const std::vector<int>& cols) {
  if (cols.empty()) throw std::invalid_argument("constraint_rank needs columns");
  std::vector<std::vector<mpq_class>> sub(p.num_rows());
  for (int i = 0; i < p.num_rows(); ++i) {
    for (int j : cols) sub[i].push_back(p.rows[i][j]);
  }
  return matrix_rank(std::move(sub));
}

}  // namespace hcore
