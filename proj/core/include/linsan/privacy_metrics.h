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

#ifndef LINSAN_PRIVACY_METRICS_H_
#define LINSAN_PRIVACY_METRICS_H_

#include <cstddef>
#include <vector>

#include "linsan/joint_distribution.h"
#include "linsan/reduction_channel.h"
#include "linsan/types.h"

namespace linsan {

// All leakage values are log base 2 (bits). The base is a reporting
// convention, not part of the math; multiply by ln(2) for nats.
//
// Zero handling: ratios 0/0 are skipped; a positive probability against a
// structural zero yields +infinity. Channels with unbounded leakage are
// legal inputs, so infinity is a sentinel value, not an error.

struct LdpWitness {
  std::size_t y = 0;
  std::size_t s_num = 0;
  std::size_t s_den = 0;
};

struct LiftWitness {
  std::size_t y = 0;
  std::size_t s = 0;
};

// Worst-case distinguishability of any two secrets from one released
// symbol: max over (y, s, s') of log2( P(y|s) / P(y|s') ).
double Ldp(const SoftChannel& channel, LdpWitness* witness = nullptr);

// Worst-case absolute posterior-to-prior ratio:
// max over (y, s) of |log2( P(y|s) / P_Y(y) )|.
double LogLift(const SoftChannel& channel, const Dist& p_s,
               LiftWitness* witness = nullptr);

// First-order predictions for the reduced channel at a given level:
// (1 - alpha) times the leakage of the unreduced dataset. These are the
// straight-line approximants the exact curves hug for small lifts.
double LdpFirstOrder(const JointDistribution& joint, Alpha alpha);
double LogLiftFirstOrder(const JointDistribution& joint, Alpha alpha);

// Elementwise |P(y|s) - P_Y(y)|, indexed (s, y). The linear reduction
// shrinks every entry of this matrix by exactly (1 - alpha).
Matrix L1Deviation(const SoftChannel& channel, const Dist& p_s);

// Per-symbol variance of the conditional row viewed as a random variable
// in s: Var(y) = sum_s p_s(s) * (P(y|s) - P_Y(y))^2. The linear reduction
// scales this by (1 - alpha)^2.
std::vector<double> ConditionalVariance(const SoftChannel& channel,
                                        const Dist& p_s);

struct PrivacyReport {
  double ldp_bits = 0.0;
  double log_lift_bits = 0.0;
  LdpWitness ldp_witness;
  LiftWitness log_lift_witness;
  // (1 - alpha)-scaled dataset leakage; zero when the report describes an
  // unreduced dataset.
  double ldp_first_order_bits = 0.0;
  double log_lift_first_order_bits = 0.0;
};

// Report for an arbitrary channel (no first-order terms).
PrivacyReport ReportPrivacy(const SoftChannel& channel, const Dist& p_s);

// Report for the linear-reduction channel of `joint` at `alpha`,
// including the first-order predictions.
PrivacyReport ReportPrivacy(const JointDistribution& joint, Alpha alpha);

}  // namespace linsan

#endif  // LINSAN_PRIVACY_METRICS_H_
