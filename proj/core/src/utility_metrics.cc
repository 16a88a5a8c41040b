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

#include "linsan/utility_metrics.h"

#include <cmath>

#include "linsan/error.h"

namespace linsan {

DtvPair Dtv(const MarkovMechanism& channel, const Dist& p_x) {
  const Matrix& rows = channel.rows();
  if (p_x.size() != rows.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the channel alphabet");
  }
  DtvPair pair;
  double kept = 0.0;
  for (std::size_t x = 0; x < rows.rows(); ++x) {
    kept += p_x[x] * rows(x, x);
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      const double identity = x == y ? 1.0 : 0.0;
      pair.full += p_x[x] * std::abs(rows(x, y) - identity);
    }
  }
  pair.half = 1.0 - kept;
  return pair;
}

double ExpectedDistortion(const MarkovMechanism& channel, const Dist& p_x,
                          const DistortionMatrix& d) {
  const Matrix& rows = channel.rows();
  if (p_x.size() != rows.rows() || d.size() != rows.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal or distortion does not match the channel alphabet");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < rows.rows(); ++x) {
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      total += p_x[x] * rows(x, y) * d(x, y);
    }
  }
  return total;
}

double EntropyBits(const Dist& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
  }
  return h;
}

double MutualInformationBits(const MarkovMechanism& channel, const Dist& p_x) {
  const Matrix& rows = channel.rows();
  if (p_x.size() != rows.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal does not match the channel alphabet");
  }
  const Dist p_y = channel.OutputMarginal(p_x);
  double mi = 0.0;
  for (std::size_t x = 0; x < rows.rows(); ++x) {
    for (std::size_t y = 0; y < rows.cols(); ++y) {
      const double p_xy = p_x[x] * rows(x, y);
      // p_y(y) > 0 whenever p_xy > 0, so the ratio is always defined.
      if (p_xy > 0.0) mi += p_xy * std::log2(rows(x, y) / p_y[y]);
    }
  }
  // Round-off can leave a tiny negative residue on independent channels.
  return mi < 0.0 && mi > -1e-12 ? 0.0 : mi;
}

UtilityReport ReportUtility(const MarkovMechanism& channel, const Dist& p_x,
                            const DistortionMatrix& d) {
  UtilityReport report;
  const DtvPair dtv = Dtv(channel, p_x);
  report.dtv_half = dtv.half;
  report.dtv_full = dtv.full;
  report.expected_distortion = ExpectedDistortion(channel, p_x, d);
  report.mi_bits = MutualInformationBits(channel, p_x);
  report.entropy_x_bits = EntropyBits(p_x);
  report.utility_loss_bits = report.entropy_x_bits - report.mi_bits;
  return report;
}

}  // namespace linsan
