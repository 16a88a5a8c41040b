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

#include "linsan/markov_mechanism.h"

#include <cmath>
#include <string>

#include "linsan/error.h"

namespace linsan {

MarkovMechanism MarkovMechanism::ForMarginal(const Dist& p_x,
                                             const Alphabet& x_alphabet,
                                             Alpha alpha) {
  if (p_x.size() != x_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the alphabet");
  }
  const double a = alpha.value();
  const std::size_t n = p_x.size();
  Matrix rows(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows(x, y) = x == y ? 1.0 - a * (1.0 - p_x[y]) : a * p_x[y];
    }
  }
  return MarkovMechanism(x_alphabet, std::move(rows));
}

MarkovMechanism MarkovMechanism::FromRows(Alphabet x_alphabet, Matrix rows) {
  if (rows.rows() != x_alphabet.size() || rows.cols() != x_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mechanism matrix does not match the alphabet");
  }
  for (std::size_t x = 0; x < rows.rows(); ++x) {
    double row_sum = 0.0;
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      if (!(rows(x, y) >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "mechanism entry (" + x_alphabet.label(x) + ", " +
                        x_alphabet.label(y) + ") is negative");
      }
      row_sum += rows(x, y);
    }
    if (std::abs(row_sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::kRowNotStochastic,
                  "mechanism row for '" + x_alphabet.label(x) + "' sums to " +
                      std::to_string(row_sum));
    }
    for (std::size_t y = 0; y < rows.cols(); ++y) rows(x, y) /= row_sum;
  }
  return MarkovMechanism(std::move(x_alphabet), std::move(rows));
}

Dist MarkovMechanism::OutputMarginal(const Dist& p_x) const {
  if (p_x.size() != rows_.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the mechanism alphabet");
  }
  std::vector<double> p_y(rows_.cols(), 0.0);
  for (std::size_t x = 0; x < rows_.rows(); ++x) {
    for (std::size_t y = 0; y < rows_.cols(); ++y) {
      p_y[y] += p_x[x] * rows_(x, y);
    }
  }
  return Dist::FromValues(std::move(p_y));
}

double MarkovExpectedDistortion(const Dist& p_x, Alpha alpha,
                                const DistortionMatrix& d) {
  if (d.size() != p_x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distortion matrix does not match the marginal");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < p_x.size(); ++x) {
    for (std::size_t y = 0; y < p_x.size(); ++y) {
      if (x == y) continue;
      total += p_x[x] * p_x[y] * d(x, y);
    }
  }
  return alpha.value() * total;
}

double MarkovDtvHalf(const Dist& p_x, Alpha alpha) {
  double sum_sq = 0.0;
  for (std::size_t x = 0; x < p_x.size(); ++x) sum_sq += p_x[x] * p_x[x];
  return alpha.value() * (1.0 - sum_sq);
}

double MarkovDtvFull(const Dist& p_x, Alpha alpha) {
  return 2.0 * MarkovDtvHalf(p_x, alpha);
}

}  // namespace linsan
