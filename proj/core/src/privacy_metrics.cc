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

#include "linsan/privacy_metrics.h"

#include <cmath>
#include <limits>

namespace linsan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double Ldp(const SoftChannel& channel, LdpWitness* witness) {
  const Matrix& rows = channel.rows();
  double best = 0.0;
  LdpWitness best_witness;
  for (std::size_t y = 0; y < rows.cols(); ++y) {
    // The max over ordered pairs (s, s') for a fixed y is attained at the
    // row maximum against the row minimum.
    std::size_t s_max = 0, s_min = 0;
    for (std::size_t s = 1; s < rows.rows(); ++s) {
      if (rows(s, y) > rows(s_max, y)) s_max = s;
      if (rows(s, y) < rows(s_min, y)) s_min = s;
    }
    const double hi = rows(s_max, y), lo = rows(s_min, y);
    if (hi == 0.0) continue;  // all-zero column: every pair is 0/0
    double value = lo == 0.0 ? kInf : std::log2(hi / lo);
    if (value > best) {
      best = value;
      best_witness = {y, s_max, s_min};
    }
  }
  if (witness != nullptr) *witness = best_witness;
  return best;
}

double LogLift(const SoftChannel& channel, const Dist& p_s,
               LiftWitness* witness) {
  const Matrix& rows = channel.rows();
  const Dist p_y = channel.OutputMarginal(p_s);
  double best = 0.0;
  LiftWitness best_witness;
  for (std::size_t y = 0; y < rows.cols(); ++y) {
    if (p_y[y] == 0.0) continue;  // column is identically zero
    for (std::size_t s = 0; s < rows.rows(); ++s) {
      double value =
          rows(s, y) == 0.0 ? kInf : std::abs(std::log2(rows(s, y) / p_y[y]));
      if (value > best) {
        best = value;
        best_witness = {y, s};
      }
    }
  }
  if (witness != nullptr) *witness = best_witness;
  return best;
}

double LdpFirstOrder(const JointDistribution& joint, Alpha alpha) {
  return (1.0 - alpha.value()) * Ldp(IdentityChannel(joint));
}

double LogLiftFirstOrder(const JointDistribution& joint, Alpha alpha) {
  return (1.0 - alpha.value()) *
         LogLift(IdentityChannel(joint), joint.marginal_s());
}

Matrix L1Deviation(const SoftChannel& channel, const Dist& p_s) {
  const Matrix& rows = channel.rows();
  const Dist p_y = channel.OutputMarginal(p_s);
  Matrix dev(rows.rows(), rows.cols());
  for (std::size_t s = 0; s < rows.rows(); ++s) {
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      dev(s, y) = std::abs(rows(s, y) - p_y[y]);
    }
  }
  return dev;
}

std::vector<double> ConditionalVariance(const SoftChannel& channel,
                                        const Dist& p_s) {
  const Matrix& rows = channel.rows();
  const Dist p_y = channel.OutputMarginal(p_s);
  std::vector<double> var(rows.cols(), 0.0);
  for (std::size_t y = 0; y < rows.cols(); ++y) {
    for (std::size_t s = 0; s < rows.rows(); ++s) {
      const double dev = rows(s, y) - p_y[y];
      var[y] += p_s[s] * dev * dev;
    }
  }
  return var;
}

PrivacyReport ReportPrivacy(const SoftChannel& channel, const Dist& p_s) {
  PrivacyReport report;
  report.ldp_bits = Ldp(channel, &report.ldp_witness);
  report.log_lift_bits = LogLift(channel, p_s, &report.log_lift_witness);
  return report;
}

PrivacyReport ReportPrivacy(const JointDistribution& joint, Alpha alpha) {
  PrivacyReport report =
      ReportPrivacy(LinearReduce(joint, alpha), joint.marginal_s());
  report.ldp_first_order_bits = LdpFirstOrder(joint, alpha);
  report.log_lift_first_order_bits = LogLiftFirstOrder(joint, alpha);
  return report;
}

}  // namespace linsan
