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

#include "linsan/formats.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "linsan/error.h"

namespace linsan::cli {

namespace {

constexpr std::string_view kJointHeader = "s,x,prob";
constexpr std::string_view kRecordsHeader = "s,x";
constexpr std::string_view kConditionalMagic = "#P_S";
constexpr std::string_view kConditionalRowsMagic = "#P_X|S";
constexpr std::string_view kMechanismMagic = "# linsan mechanism v1";

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

InputFormat DetectFormat(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) {
    if (IsBlank(line)) continue;
    if (line.rfind(kConditionalMagic, 0) == 0) return InputFormat::kConditional;
    if (line == kJointHeader) return InputFormat::kJoint;
    if (line == kRecordsHeader) return InputFormat::kRecords;
    throw Error(ErrorCode::kParseError,
                "unrecognized header '" + line +
                    "'; expected 's,x,prob', 's,x' or a '#P_S' block "
                    "(or pass --format)");
  }
  throw Error(ErrorCode::kParseError, "input file is empty");
}

// Collects labels in order of first appearance.
class LabelOrder {
 public:
  std::size_t Intern(const std::string& label) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    labels_.push_back(label);
    return labels_.size() - 1;
  }
  std::vector<std::string> take() && { return std::move(labels_); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

JointDistribution ParseJointTriplets(const std::vector<std::string>& lines) {
  LabelOrder s_order, x_order;
  std::vector<std::tuple<std::size_t, std::size_t, double>> cells;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (IsBlank(line) || line[0] == '#') continue;
    if (!header_seen && line == kJointHeader) {
      header_seen = true;
      continue;
    }
    header_seen = true;
    const auto fields = SplitCsv(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(i + 1) +
                      ": expected 's,x,prob', got '" + line + "'");
    }
    cells.emplace_back(s_order.Intern(fields[0]), x_order.Intern(fields[1]),
                       ParseProb(fields[2], "line " + std::to_string(i + 1)));
  }
  if (cells.empty()) {
    throw Error(ErrorCode::kParseError, "no probability cells in input");
  }
  Matrix p(s_order.labels().size(), x_order.labels().size(), 0.0);
  std::vector<bool> seen(p.rows() * p.cols(), false);
  for (const auto& [s, x, prob] : cells) {
    if (seen[s * p.cols() + x]) {
      throw Error(ErrorCode::kParseError,
                  "duplicate cell (" + s_order.labels()[s] + ", " +
                      x_order.labels()[x] + ")");
    }
    seen[s * p.cols() + x] = true;
    p(s, x) = prob;
  }
  return JointDistribution::FromJoint(Alphabet(std::move(s_order).take()),
                                      Alphabet(std::move(x_order).take()),
                                      std::move(p));
}

JointDistribution ParseConditional(const std::vector<std::string>& lines) {
  std::vector<std::string> s_labels;
  std::vector<double> p_s_values;
  std::vector<std::string> x_labels;
  std::map<std::string, std::vector<double>> rows_by_label;

  enum class Section { kPreamble, kPs, kRows };
  Section section = Section::kPreamble;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (IsBlank(line)) continue;
    const std::string context = "line " + std::to_string(i + 1);
    if (line.rfind(kConditionalRowsMagic, 0) == 0) {
      const auto fields = SplitCsv(line);
      x_labels.assign(fields.begin() + 1, fields.end());
      if (x_labels.empty()) {
        throw Error(ErrorCode::kParseError,
                    context + ": '#P_X|S' carries no public labels");
      }
      section = Section::kRows;
      continue;
    }
    if (line.rfind(kConditionalMagic, 0) == 0) {
      section = Section::kPs;
      continue;
    }
    const auto fields = SplitCsv(line);
    switch (section) {
      case Section::kPreamble:
        throw Error(ErrorCode::kParseError,
                    context + ": expected '#P_S' before data");
      case Section::kPs:
        if (fields.size() != 2) {
          throw Error(ErrorCode::kParseError,
                      context + ": expected 'label,prob' in the #P_S block");
        }
        s_labels.push_back(fields[0]);
        p_s_values.push_back(ParseProb(fields[1], context));
        break;
      case Section::kRows: {
        if (fields.size() != x_labels.size() + 1) {
          throw Error(ErrorCode::kParseError,
                      context + ": conditional row has " +
                          std::to_string(fields.size() - 1) +
                          " entries, expected " +
                          std::to_string(x_labels.size()));
        }
        std::vector<double> row;
        row.reserve(x_labels.size());
        for (std::size_t k = 1; k < fields.size(); ++k) {
          row.push_back(ParseProb(fields[k], context));
        }
        if (!rows_by_label.emplace(fields[0], std::move(row)).second) {
          throw Error(ErrorCode::kParseError,
                      context + ": duplicate conditional row for '" +
                          fields[0] + "'");
        }
        break;
      }
    }
  }
  if (s_labels.empty() || x_labels.empty()) {
    throw Error(ErrorCode::kParseError,
                "conditional input needs a #P_S block and a #P_X|S block");
  }
  Matrix cond(s_labels.size(), x_labels.size());
  for (std::size_t s = 0; s < s_labels.size(); ++s) {
    auto it = rows_by_label.find(s_labels[s]);
    if (it == rows_by_label.end()) {
      throw Error(ErrorCode::kParseError,
                  "no conditional row for secret '" + s_labels[s] + "'");
    }
    for (std::size_t x = 0; x < x_labels.size(); ++x) {
      cond(s, x) = it->second[x];
    }
    rows_by_label.erase(it);
  }
  if (!rows_by_label.empty()) {
    throw Error(ErrorCode::kParseError,
                "conditional row for undeclared secret '" +
                    rows_by_label.begin()->first + "'");
  }
  return JointDistribution::FromConditional(Alphabet(std::move(s_labels)),
                                            Alphabet(std::move(x_labels)),
                                            cond, Dist::FromValues(p_s_values));
}

std::vector<Record> ParseRecords(const std::vector<std::string>& lines) {
  std::vector<Record> records;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (IsBlank(line) || line[0] == '#') continue;
    if (!header_seen && line == kRecordsHeader) {
      header_seen = true;
      continue;
    }
    header_seen = true;
    const auto fields = SplitCsv(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(i + 1) +
                      ": expected 's,x', got '" + line + "'");
    }
    records.push_back({fields[0], fields[1]});
  }
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "records file has no rows");
  }
  return records;
}

JointDistribution JointFromRecords(const std::vector<Record>& records) {
  LabelOrder s_order, x_order;
  for (const Record& r : records) {
    s_order.Intern(r.s);
    x_order.Intern(r.x);
  }
  return EstimateJoint(records, Alphabet(std::move(s_order).take()),
                       Alphabet(std::move(x_order).take()));
}

std::string JoinLabels(const std::vector<std::string>& labels) {
  std::string joined;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) joined += ',';
    joined += labels[i];
  }
  return joined;
}

}  // namespace

InputFormat ParseFormatName(const std::string& name) {
  if (name == "auto") return InputFormat::kAuto;
  if (name == "joint") return InputFormat::kJoint;
  if (name == "conditional") return InputFormat::kConditional;
  if (name == "records") return InputFormat::kRecords;
  throw Error(ErrorCode::kParseError, "unknown format '" + name + "'");
}

const char* FormatName(InputFormat format) {
  switch (format) {
    case InputFormat::kAuto:
      return "auto";
    case InputFormat::kJoint:
      return "joint";
    case InputFormat::kConditional:
      return "conditional";
    case InputFormat::kRecords:
      return "records";
  }
  return "unknown";
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

double ParseProb(const std::string& token, const std::string& context) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw Error(ErrorCode::kParseError,
                context + ": '" + token + "' is not a number");
  }
  return value;
}

Dataset LoadDataset(const std::string& path, InputFormat format) {
  const auto lines = ReadLines(path);
  InputFormat actual =
      format == InputFormat::kAuto ? DetectFormat(lines) : format;
  switch (actual) {
    case InputFormat::kJoint:
      return {ParseJointTriplets(lines), actual};
    case InputFormat::kConditional:
      return {ParseConditional(lines), actual};
    case InputFormat::kRecords:
      return {JointFromRecords(ParseRecords(lines)), actual};
    case InputFormat::kAuto:
      break;
  }
  throw Error(ErrorCode::kParseError, "unresolved input format");
}

std::vector<Record> LoadRecords(const std::string& path, InputFormat format) {
  const auto lines = ReadLines(path);
  if (format == InputFormat::kAuto) {
    format = DetectFormat(lines);
  }
  if (format != InputFormat::kRecords) {
    throw Error(ErrorCode::kParseError,
                "expected a records file, found format '" +
                    std::string(FormatName(format)) + "'");
  }
  return ParseRecords(lines);
}

DistortionMatrix LoadDistortion(const std::string& path,
                                const Alphabet& x_alphabet) {
  const auto lines = ReadLines(path);
  std::vector<std::size_t> column_of;  // file column -> alphabet index
  Matrix d(x_alphabet.size(), x_alphabet.size(), 0.0);
  std::vector<bool> row_seen(x_alphabet.size(), false);
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (IsBlank(line) || line[0] == '#') continue;
    const std::string context = "line " + std::to_string(i + 1);
    const auto fields = SplitCsv(line);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != x_alphabet.size() + 1) {
        throw Error(ErrorCode::kDimensionMismatch,
                    context + ": distortion header has " +
                        std::to_string(fields.size() - 1) +
                        " labels, expected " +
                        std::to_string(x_alphabet.size()));
      }
      for (std::size_t k = 1; k < fields.size(); ++k) {
        column_of.push_back(x_alphabet.IndexOf(fields[k]));
      }
      continue;
    }
    if (fields.size() != x_alphabet.size() + 1) {
      throw Error(ErrorCode::kDimensionMismatch,
                  context + ": distortion row has wrong width");
    }
    const std::size_t x = x_alphabet.IndexOf(fields[0]);
    if (row_seen[x]) {
      throw Error(ErrorCode::kParseError,
                  context + ": duplicate distortion row for '" + fields[0] +
                      "'");
    }
    row_seen[x] = true;
    for (std::size_t k = 1; k < fields.size(); ++k) {
      d(x, column_of[k - 1]) = ParseProb(fields[k], context);
    }
  }
  for (std::size_t x = 0; x < x_alphabet.size(); ++x) {
    if (!row_seen[x]) {
      throw Error(ErrorCode::kParseError,
                  "distortion file is missing the row for '" +
                      x_alphabet.label(x) + "'");
    }
  }
  return DistortionMatrix::FromMatrix(std::move(d));
}

void WriteMechanism(std::ostream& out, const Mechanism& mechanism,
                    const MechanismMetadata& metadata) {
  out << kMechanismMagic << "\n";
  out << "# family: " << metadata.family << "\n";
  out << "# alpha: " << FormatExact(metadata.alpha) << "\n";
  out << "# base: " << metadata.base << "\n";
  out << "# rng: " << metadata.rng_id << "\n";
  out << "# input_fnv1a64: " << metadata.input_hash << "\n";
  out << "# s_alphabet: " << JoinLabels(mechanism.s_alphabet().labels())
      << "\n";
  out << "# x_alphabet: " << JoinLabels(mechanism.x_alphabet().labels())
      << "\n";
  out << "s,x_in,y,prob\n";
  const std::size_t n = mechanism.x_alphabet().size();
  for (std::size_t s = 0; s < mechanism.s_alphabet().size(); ++s) {
    for (std::size_t x_in = 0; x_in < n; ++x_in) {
      for (std::size_t y = 0; y < n; ++y) {
        out << mechanism.s_alphabet().label(s) << ','
            << mechanism.x_alphabet().label(x_in) << ','
            << mechanism.x_alphabet().label(y) << ','
            << FormatExact(mechanism(s, x_in, y)) << "\n";
      }
    }
  }
}

MechanismFile ReadMechanism(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  MechanismMetadata metadata;
  std::vector<std::string> s_labels, x_labels;
  std::vector<std::tuple<std::string, std::string, std::string, double>> cells;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& current = lines[i];
    if (IsBlank(current)) continue;
    const std::string context = "line " + std::to_string(i + 1);
    if (current[0] == '#') {
      auto value_after = [&](std::string_view prefix) {
        std::string v = current.substr(prefix.size());
        if (!v.empty() && v.front() == ' ') v.erase(0, 1);
        return v;
      };
      if (current.rfind("# family:", 0) == 0) {
        metadata.family = value_after("# family:");
      } else if (current.rfind("# alpha:", 0) == 0) {
        metadata.alpha = ParseProb(value_after("# alpha:"), context);
      } else if (current.rfind("# base:", 0) == 0) {
        metadata.base = value_after("# base:");
      } else if (current.rfind("# rng:", 0) == 0) {
        metadata.rng_id = value_after("# rng:");
      } else if (current.rfind("# input_fnv1a64:", 0) == 0) {
        metadata.input_hash = value_after("# input_fnv1a64:");
      } else if (current.rfind("# s_alphabet:", 0) == 0) {
        s_labels = SplitCsv(value_after("# s_alphabet:"));
      } else if (current.rfind("# x_alphabet:", 0) == 0) {
        x_labels = SplitCsv(value_after("# x_alphabet:"));
      }
      continue;
    }
    if (!header_seen && current == "s,x_in,y,prob") {
      header_seen = true;
      continue;
    }
    const auto fields = SplitCsv(current);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kParseError,
                  context + ": expected 's,x_in,y,prob'");
    }
    cells.emplace_back(fields[0], fields[1], fields[2],
                       ParseProb(fields[3], context));
  }
  if (s_labels.empty() || x_labels.empty()) {
    throw Error(ErrorCode::kParseError,
                "mechanism file is missing its alphabet metadata");
  }
  Alphabet s_alphabet(std::move(s_labels));
  Alphabet x_alphabet(std::move(x_labels));
  std::vector<Matrix> slices(
      s_alphabet.size(), Matrix(x_alphabet.size(), x_alphabet.size(), 0.0));
  for (const auto& [s, x_in, y, prob] : cells) {
    slices[s_alphabet.IndexOf(s)](x_alphabet.IndexOf(x_in),
                                  x_alphabet.IndexOf(y)) = prob;
  }
  return {Mechanism::FromTensor(std::move(s_alphabet), std::move(x_alphabet),
                                std::move(slices)),
          std::move(metadata)};
}

MechanismFile ReadMechanismFromPath(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  }
  return ReadMechanism(in);
}

std::string FormatExact(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string FormatSig9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace linsan::cli
