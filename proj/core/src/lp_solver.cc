// Copyright 2026 The Linsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linsan/lp_solver.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "linsan/error.h"

namespace linsan {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense simplex tableau over columns [structural | upper-bound slacks |
// artificials | rhs], with Bland's rule (lowest eligible index enters,
// lowest-index basic variable leaves on ratio ties). Bland's rule cannot
// cycle, which matters because the transportation systems fed in here are
// degenerate as a rule, not an exception.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1), 0.0) {}

  double& At(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  double& Rhs(std::size_t r) { return cells_[r * (cols_ + 1) + cols_]; }

  void Pivot(std::size_t pivot_row, std::size_t pivot_col,
             std::vector<double>& cost, double& cost_rhs) {
    const double inv = 1.0 / At(pivot_row, pivot_col);
    for (std::size_t c = 0; c <= cols_; ++c) {
      cells_[pivot_row * (cols_ + 1) + c] *= inv;
    }
    At(pivot_row, pivot_col) = 1.0;  // cancel residual round-off
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      const double factor = At(r, pivot_col);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        cells_[r * (cols_ + 1) + c] -=
            factor * cells_[pivot_row * (cols_ + 1) + c];
      }
      At(r, pivot_col) = 0.0;
    }
    const double factor = cost[pivot_col];
    if (factor != 0.0) {
      for (std::size_t c = 0; c < cols_; ++c) {
        cost[c] -= factor * At(pivot_row, c);
      }
      cost_rhs -= factor * Rhs(pivot_row);
      cost[pivot_col] = 0.0;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> cells_;
};

void ValidateDimensions(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "no decision variables");
  }
  if (lp.eq_matrix.rows() != lp.eq_rhs.size() ||
      (lp.eq_matrix.rows() > 0 && lp.eq_matrix.cols() != n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "equality system does not match the variable count");
  }
  if (!lp.lower.empty() && lp.lower.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "lower bounds size mismatch");
  }
  if (!lp.upper.empty() && lp.upper.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "upper bounds size mismatch");
  }
  for (double v : lp.objective) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "objective coefficients must be finite");
    }
  }
  for (std::size_t r = 0; r < lp.eq_matrix.rows(); ++r) {
    if (!std::isfinite(lp.eq_rhs[r])) {
      throw Error(ErrorCode::kDimensionMismatch, "rhs must be finite");
    }
    for (std::size_t c = 0; c < lp.eq_matrix.cols(); ++c) {
      if (!std::isfinite(lp.eq_matrix(r, c))) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "constraint coefficients must be finite");
      }
    }
  }
}

}  // namespace

LpSolution Solve(const LinearProgram& lp) {
  ValidateDimensions(lp);
  const std::size_t n = lp.objective.size();
  const std::size_t m0 = lp.eq_matrix.rows();

  std::vector<double> lower(n, 0.0), upper(n, kInf);
  if (!lp.lower.empty()) lower = lp.lower;
  if (!lp.upper.empty()) upper = lp.upper;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lower[j])) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "lower bounds must be finite");
    }
    if (upper[j] < lower[j]) {
      return {LpStatus::kInfeasible, {}, 0.0};
    }
  }

  // Shift to z = x - lower, z >= 0, and add one slack row per finite
  // upper bound: z_j + s = upper_j - lower_j.
  std::vector<std::size_t> bounded;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(upper[j])) bounded.push_back(j);
  }
  const std::size_t m = m0 + bounded.size();
  const std::size_t n_struct = n + bounded.size();
  const std::size_t n_total = n_struct + m;  // + artificials

  Tableau t(m, n_total);
  for (std::size_t r = 0; r < m0; ++r) {
    double rhs = lp.eq_rhs[r];
    for (std::size_t j = 0; j < n; ++j) {
      t.At(r, j) = lp.eq_matrix(r, j);
      rhs -= lp.eq_matrix(r, j) * lower[j];
    }
    t.Rhs(r) = rhs;
  }
  for (std::size_t k = 0; k < bounded.size(); ++k) {
    const std::size_t r = m0 + k;
    t.At(r, bounded[k]) = 1.0;
    t.At(r, n + k) = 1.0;
    t.Rhs(r) = upper[bounded[k]] - lower[bounded[k]];
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (t.Rhs(r) < 0.0) {
      for (std::size_t c = 0; c < n_struct; ++c) t.At(r, c) = -t.At(r, c);
      t.Rhs(r) = -t.Rhs(r);
    }
    t.At(r, n_struct + r) = 1.0;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n_struct + r;

  // Phase-1 cost: sum of artificials, expressed in the artificial basis.
  std::vector<double> cost(n_total, 0.0);
  double cost_rhs = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n_struct; ++c) cost[c] -= t.At(r, c);
    cost_rhs -= t.Rhs(r);
  }

  auto run_simplex = [&](std::size_t eligible_cols) -> bool {
    // Returns false on unboundedness. `eligible_cols` limits entering
    // candidates (artificials are barred once phase 1 ends).
    for (;;) {
      std::size_t entering = n_total;
      for (std::size_t c = 0; c < eligible_cols; ++c) {
        if (cost[c] < -kReducedCostTol) {
          entering = c;
          break;  // Bland: lowest index
        }
      }
      if (entering == n_total) return true;

      std::size_t leaving = m;
      double best_ratio = kInf;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = t.At(r, entering);
        if (a <= kPivotTol) continue;
        const double ratio = t.Rhs(r) / a;
        if (ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          best_ratio = ratio;
          leaving = r;
        }
      }
      if (leaving == m) {
        // Bland guarantees |pivot| above tolerance or none at all; a
        // column of near-zero positives is a breakdown, not unbounded.
        for (std::size_t r = 0; r < m; ++r) {
          if (t.At(r, entering) > 0.0) {
            throw Error(ErrorCode::kNumericalBreakdown,
                        "no pivot above 1e-11 in column " +
                            std::to_string(entering));
          }
        }
        return false;
      }
      basis[leaving] = entering;
      t.Pivot(leaving, entering, cost, cost_rhs);
    }
  };

  if (!run_simplex(n_total)) {
    // Phase 1 is bounded below by zero; running off to -infinity means
    // the arithmetic has gone bad.
    throw Error(ErrorCode::kNumericalBreakdown, "phase 1 diverged");
  }
  const double scale = std::max(1.0, std::abs(cost_rhs));
  if (-cost_rhs > kFeasTol * scale) {
    return {LpStatus::kInfeasible, {}, 0.0};
  }

  // Drive surviving artificials out of the basis where possible; a row
  // with no structural pivot is redundant and its artificial stays basic
  // at value zero, harmless once artificials are barred from entering.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n_struct) continue;
    for (std::size_t c = 0; c < n_struct; ++c) {
      if (std::abs(t.At(r, c)) > kPivotTol) {
        basis[r] = c;
        t.Pivot(r, c, cost, cost_rhs);
        break;
      }
    }
  }

  // Phase-2 cost: the real objective on shifted variables, reduced
  // against the current basis.
  for (std::size_t c = 0; c < n_total; ++c) cost[c] = 0.0;
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  cost_rhs = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const double basic_cost = basis[r] < n ? lp.objective[basis[r]] : 0.0;
    if (basic_cost == 0.0) continue;
    for (std::size_t c = 0; c < n_total; ++c) {
      cost[c] -= basic_cost * t.At(r, c);
    }
    cost_rhs -= basic_cost * t.Rhs(r);
  }

  if (!run_simplex(n_struct)) {
    return {LpStatus::kUnbounded, {}, 0.0};
  }

  std::vector<double> values = lower;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) values[basis[r]] += t.Rhs(r);
  }
  double objective_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    objective_value += lp.objective[j] * values[j];
  }
  return {LpStatus::kOptimal, std::move(values), objective_value};
}

}  // namespace linsan
