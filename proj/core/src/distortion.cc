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

#include "linsan/distortion.h"

#include <string>

#include "linsan/error.h"

namespace linsan {

DistortionMatrix DistortionMatrix::FromMatrix(Matrix d) {
  if (d.rows() != d.cols() || d.rows() == 0) {
    throw Error(ErrorCode::kInvalidDistortion,
                "distortion matrix must be square and nonempty");
  }
  for (std::size_t x = 0; x < d.rows(); ++x) {
    if (d(x, x) != 0.0) {
      throw Error(ErrorCode::kInvalidDistortion,
                  "distortion diagonal must be zero (row " +
                      std::to_string(x) + ")");
    }
    for (std::size_t y = 0; y < d.cols(); ++y) {
      if (!(d(x, y) >= 0.0)) {
        throw Error(ErrorCode::kInvalidDistortion,
                    "distortion entries must be nonnegative");
      }
    }
  }
  return DistortionMatrix(std::move(d));
}

DistortionMatrix DistortionMatrix::Hamming(std::size_t n) {
  Matrix d(n, n, 1.0);
  for (std::size_t x = 0; x < n; ++x) d(x, x) = 0.0;
  return FromMatrix(std::move(d));
}

}  // namespace linsan
