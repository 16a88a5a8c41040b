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

#ifndef LINSAN_CLI_FORMATS_H_
#define LINSAN_CLI_FORMATS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "linsan/distortion.h"
#include "linsan/joint_distribution.h"
#include "linsan/nonmarkov_mechanism.h"
#include "linsan/sanitize.h"

namespace linsan::cli {

// Dataset input formats, auto-detected by their headers:
//   joint        header `s,x,prob`, then one probability cell per line
//   conditional  a `#P_S` block of `label,prob` lines, then a
//                `#P_X|S,<x labels...>` line and one conditional row per
//                secret
//   records      header `s,x`, then one raw observation per line
enum class InputFormat { kAuto, kJoint, kConditional, kRecords };

InputFormat ParseFormatName(const std::string& name);
const char* FormatName(InputFormat format);

struct Dataset {
  JointDistribution joint;
  InputFormat source_format;
};

// Loads any dataset format; records are reduced to their empirical joint.
Dataset LoadDataset(const std::string& path, InputFormat format);

// Loads a records file (the only format carrying row-level data).
std::vector<Record> LoadRecords(const std::string& path, InputFormat format);

// Square cost matrix keyed by the dataset's public alphabet. The file is
// a labeled CSV: header `y,<y labels...>`, one row per input symbol.
// Rows and columns may appear in any order; they are matched by label.
DistortionMatrix LoadDistortion(const std::string& path,
                                const Alphabet& x_alphabet);

struct MechanismMetadata {
  std::string family;
  double alpha = 0.0;
  std::string base = "bits";
  std::string rng_id;
  std::string input_hash;
};

// Mechanism files are CSV quadruplets `s,x_in,y,prob` under `#` metadata
// lines. Probabilities use shortest round-trip formatting, so a written
// file re-reads bit-exactly.
void WriteMechanism(std::ostream& out, const Mechanism& mechanism,
                    const MechanismMetadata& metadata);

struct MechanismFile {
  Mechanism mechanism;
  MechanismMetadata metadata;
};

MechanismFile ReadMechanism(std::istream& in);
MechanismFile ReadMechanismFromPath(const std::string& path);

// Shortest representation that parses back to the same double.
std::string FormatExact(double value);
// Nine significant digits, for tabular report output.
std::string FormatSig9(double value);

std::uint64_t Fnv1a64(std::string_view bytes);
std::string ReadFileBytes(const std::string& path);

// CSV helpers shared by the parsers. No quoting: labels must not contain
// commas. Carriage returns are stripped.
std::vector<std::string> SplitCsv(const std::string& line);
double ParseProb(const std::string& token, const std::string& context);

}  // namespace linsan::cli

#endif  // LINSAN_CLI_FORMATS_H_
