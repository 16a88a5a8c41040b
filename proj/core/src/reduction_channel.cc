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

#include "linsan/reduction_channel.h"

#include <cmath>
#include <string>

#include "linsan/error.h"

namespace linsan {

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "privacy level " + std::to_string(value) +
                    " is outside (0, 1]");
  }
}

SoftChannel SoftChannel::FromRows(Alphabet s_alphabet, Alphabet y_alphabet,
                                  Matrix rows) {
  if (rows.rows() != s_alphabet.size() || rows.cols() != y_alphabet.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel rows do not match the alphabets");
  }
  for (std::size_t s = 0; s < rows.rows(); ++s) {
    double row_sum = 0.0;
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      if (!(rows(s, y) >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "channel entry (" + s_alphabet.label(s) + ", " +
                        y_alphabet.label(y) + ") is negative");
      }
      row_sum += rows(s, y);
    }
    if (std::abs(row_sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::kRowNotStochastic,
                  "channel row for '" + s_alphabet.label(s) + "' sums to " +
                      std::to_string(row_sum));
    }
    for (std::size_t y = 0; y < rows.cols(); ++y) rows(s, y) /= row_sum;
  }
  return SoftChannel(std::move(s_alphabet), std::move(y_alphabet),
                     std::move(rows));
}

Dist SoftChannel::OutputMarginal(const Dist& p_s) const {
  if (p_s.size() != rows_.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the channel's secret alphabet");
  }
  std::vector<double> p_y(rows_.cols(), 0.0);
  for (std::size_t s = 0; s < rows_.rows(); ++s) {
    for (std::size_t y = 0; y < rows_.cols(); ++y) {
      p_y[y] += p_s[s] * rows_(s, y);
    }
  }
  return Dist::FromValues(std::move(p_y));
}

SoftChannel LinearReduce(const JointDistribution& joint, Alpha alpha) {
  const double a = alpha.value();
  const Matrix cond = joint.ConditionalXGivenS();
  const Dist& p_x = joint.marginal_x();
  Matrix rows(cond.rows(), cond.cols());
  for (std::size_t s = 0; s < cond.rows(); ++s) {
    for (std::size_t y = 0; y < cond.cols(); ++y) {
      rows(s, y) = (1.0 - a) * cond(s, y) + a * p_x[y];
    }
  }
  return SoftChannel::FromRows(joint.s_alphabet(), joint.x_alphabet(),
                               std::move(rows));
}

SoftChannel IdentityChannel(const JointDistribution& joint) {
  return SoftChannel::FromRows(joint.s_alphabet(), joint.x_alphabet(),
                               joint.ConditionalXGivenS());
}

JointDistribution InducedJoint(const SoftChannel& channel, const Dist& p_s) {
  if (p_s.size() != channel.s_alphabet().size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the channel's secret alphabet");
  }
  Matrix p(channel.rows().rows(), channel.rows().cols());
  for (std::size_t s = 0; s < p.rows(); ++s) {
    for (std::size_t y = 0; y < p.cols(); ++y) {
      p(s, y) = p_s[s] * channel.rows()(s, y);
    }
  }
  return JointDistribution::FromJoint(channel.s_alphabet(),
                                      channel.y_alphabet(), std::move(p));
}

}  // namespace linsan
