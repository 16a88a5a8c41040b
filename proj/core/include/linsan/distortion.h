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

#ifndef LINSAN_DISTORTION_H_
#define LINSAN_DISTORTION_H_

#include <cstddef>

#include "linsan/types.h"

namespace linsan {

// Nonnegative per-pair cost d(x_in, y) with zero diagonal, used for
// expected-distortion utilities.
class DistortionMatrix {
 public:
  // Validates d >= 0 and d(x, x) = 0.
  static DistortionMatrix FromMatrix(Matrix d);

  // 0/1 cost: free to keep a symbol, unit cost to change it.
  static DistortionMatrix Hamming(std::size_t n);

  double operator()(std::size_t x_in, std::size_t y) const {
    return d_(x_in, y);
  }
  std::size_t size() const { return d_.rows(); }
  const Matrix& matrix() const { return d_; }

 private:
  explicit DistortionMatrix(Matrix d) : d_(std::move(d)) {}
  Matrix d_;
};

}  // namespace linsan

#endif  // LINSAN_DISTORTION_H_
