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

#include "linsan/joint_distribution.h"

#include <cmath>
#include <string>

#include "linsan/error.h"

namespace linsan {

JointDistribution JointDistribution::FromJoint(Alphabet s_alphabet,
                                               Alphabet x_alphabet, Matrix p) {
  if (p.rows() != s_alphabet.size() || p.cols() != x_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pmf is " + std::to_string(p.rows()) + "x" +
                    std::to_string(p.cols()) + " but alphabets are " +
                    std::to_string(s_alphabet.size()) + "x" +
                    std::to_string(x_alphabet.size()));
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < p.rows(); ++s) {
    for (std::size_t x = 0; x < p.cols(); ++x) {
      if (!(p(s, x) >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "pmf entry (" + s_alphabet.label(s) + ", " +
                        x_alphabet.label(x) + ") is negative");
      }
      sum += p(s, x);
    }
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kSumNotOne,
                "pmf sums to " + std::to_string(sum));
  }
  for (std::size_t s = 0; s < p.rows(); ++s) {
    for (std::size_t x = 0; x < p.cols(); ++x) p(s, x) /= sum;
  }

  std::vector<double> p_s(p.rows(), 0.0), p_x(p.cols(), 0.0);
  for (std::size_t s = 0; s < p.rows(); ++s) {
    for (std::size_t x = 0; x < p.cols(); ++x) {
      p_s[s] += p(s, x);
      p_x[x] += p(s, x);
    }
  }
  for (std::size_t s = 0; s < p_s.size(); ++s) {
    if (p_s[s] <= 0.0) {
      throw Error(ErrorCode::kDeadSymbol,
                  "secret symbol '" + s_alphabet.label(s) +
                      "' has zero probability");
    }
  }
  for (std::size_t x = 0; x < p_x.size(); ++x) {
    if (p_x[x] <= 0.0) {
      throw Error(ErrorCode::kDeadSymbol,
                  "public symbol '" + x_alphabet.label(x) +
                      "' has zero probability");
    }
  }
  return JointDistribution(std::move(s_alphabet), std::move(x_alphabet),
                           std::move(p), Dist::FromValues(std::move(p_s)),
                           Dist::FromValues(std::move(p_x)));
}

JointDistribution JointDistribution::FromConditional(Alphabet s_alphabet,
                                                     Alphabet x_alphabet,
                                                     const Matrix& p_x_given_s,
                                                     const Dist& p_s) {
  if (p_x_given_s.rows() != s_alphabet.size() ||
      p_x_given_s.cols() != x_alphabet.size() ||
      p_s.size() != s_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "conditional rows do not match the alphabets");
  }
  Matrix p(p_x_given_s.rows(), p_x_given_s.cols());
  for (std::size_t s = 0; s < p.rows(); ++s) {
    double row_sum = 0.0;
    for (std::size_t x = 0; x < p.cols(); ++x) {
      if (!(p_x_given_s(s, x) >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "conditional entry (" + s_alphabet.label(s) + ", " +
                        x_alphabet.label(x) + ") is negative");
      }
      row_sum += p_x_given_s(s, x);
    }
    if (std::abs(row_sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::kRowNotStochastic,
                  "conditional row for '" + s_alphabet.label(s) +
                      "' sums to " + std::to_string(row_sum));
    }
    for (std::size_t x = 0; x < p.cols(); ++x) {
      p(s, x) = p_s[s] * (p_x_given_s(s, x) / row_sum);
    }
  }
  return FromJoint(std::move(s_alphabet), std::move(x_alphabet), std::move(p));
}

Matrix JointDistribution::ConditionalXGivenS() const {
  Matrix cond(p_.rows(), p_.cols());
  for (std::size_t s = 0; s < p_.rows(); ++s) {
    for (std::size_t x = 0; x < p_.cols(); ++x) {
      cond(s, x) = p_(s, x) / p_s_[s];
    }
  }
  return cond;
}

Matrix JointDistribution::ConditionalSGivenX() const {
  Matrix cond(p_.cols(), p_.rows());
  for (std::size_t x = 0; x < p_.cols(); ++x) {
    for (std::size_t s = 0; s < p_.rows(); ++s) {
      cond(x, s) = p_(s, x) / p_x_[x];
    }
  }
  return cond;
}

}  // namespace linsan
