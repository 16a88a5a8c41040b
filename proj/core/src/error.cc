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

#include "linsan/error.h"

namespace linsan {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidAlphabet:
      return "InvalidAlphabet";
    case ErrorCode::kNegativeEntry:
      return "NegativeEntry";
    case ErrorCode::kSumNotOne:
      return "SumNotOne";
    case ErrorCode::kDeadSymbol:
      return "DeadSymbol";
    case ErrorCode::kRowNotStochastic:
      return "RowNotStochastic";
    case ErrorCode::kAlphaOutOfRange:
      return "AlphaOutOfRange";
    case ErrorCode::kInvalidDistortion:
      return "InvalidDistortion";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kLpInfeasible:
      return "LpInfeasible";
    case ErrorCode::kNumericalBreakdown:
      return "NumericalBreakdown";
    case ErrorCode::kUnknownLabel:
      return "UnknownLabel";
  }
  return "UnknownError";
}

}  // namespace linsan
