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

#ifndef LINSAN_ERROR_H_
#define LINSAN_ERROR_H_

#include <stdexcept>
#include <string>

namespace linsan {

enum class ErrorCode {
  // Input parsing (files, grids, CLI payloads).
  kParseError,
  // Domain validation.
  kInvalidAlphabet,
  kNegativeEntry,
  kSumNotOne,
  kDeadSymbol,
  kRowNotStochastic,
  kAlphaOutOfRange,
  kInvalidDistortion,
  kEmptyInput,
  kDimensionMismatch,
  // Internal failures. kLpInfeasible firing on a constructed mechanism
  // indicates a bug, not bad input.
  kLpInfeasible,
  kNumericalBreakdown,
  // Data/label mismatches between files.
  kUnknownLabel,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linsan

#endif  // LINSAN_ERROR_H_
