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

#ifndef LINSAN_LP_SOLVER_H_
#define LINSAN_LP_SOLVER_H_

#include <vector>

#include "linsan/types.h"

namespace linsan {

// Small dense linear program:
//   minimize   objective . x
//   subject to eq_matrix x = eq_rhs,  lower <= x <= upper.
// Empty `lower` means all zeros; empty `upper` means all +infinity.
struct LinearProgram {
  std::vector<double> objective;
  Matrix eq_matrix;
  std::vector<double> eq_rhs;
  std::vector<double> lower;
  std::vector<double> upper;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective_value = 0.0;
};

// Two-phase primal simplex on a dense tableau, Bland's rule throughout.
// Problem sizes here are tiny (at most alphabet-size squared variables)
// and the transportation polytopes involved are routinely degenerate, so
// anti-cycling matters more than pivot speed. Deterministic: identical
// inputs produce identical solution vectors (lowest-index tie breaking).
//
// Throws kDimensionMismatch on malformed input and kNumericalBreakdown
// when no acceptable pivot (magnitude >= 1e-11) exists.
LpSolution Solve(const LinearProgram& lp);

}  // namespace linsan

#endif  // LINSAN_LP_SOLVER_H_
