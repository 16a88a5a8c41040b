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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "linsan/commands.h"

namespace {

linsan::cli::InputFormat FormatFromFlag(const std::string& name) {
  return linsan::cli::ParseFormatName(name);
}

}  // namespace

int main(int argc, char** argv) {
  using linsan::cli::InputFormat;

  CLI::App app{
      "linsan: privacy metrics, randomization mechanisms and "
      "privacy-utility sweeps for discrete (secret, public) datasets"};
  app.require_subcommand(1);

  std::string format_name = "auto";
  std::string base_name = "bits";

  // inspect
  auto* inspect = app.add_subcommand(
      "inspect", "Report leakage and dataset statistics for an input file");
  std::string inspect_input;
  double inspect_alpha = -1.0;
  inspect->add_option("input", inspect_input, "dataset file")->required();
  inspect->add_option("--format", format_name,
                      "input format: auto|joint|conditional|records");
  auto* inspect_alpha_option = inspect->add_option(
      "--alpha", inspect_alpha,
      "also report the reduced channel at this level");
  inspect->add_option("--base", base_name, "log base: bits|nats")
      ->check(CLI::IsMember({"bits", "nats"}));

  // mechanize
  auto* mechanize = app.add_subcommand(
      "mechanize", "Construct a randomization mechanism and write it out");
  std::string mech_input, mech_family, mech_distortion, mech_out;
  double mech_alpha = 0.0;
  mechanize->add_option("input", mech_input, "dataset file")->required();
  mechanize->add_option("--alpha", mech_alpha, "privacy level in (0,1]")
      ->required();
  mechanize
      ->add_option("--family", mech_family,
                   "markov | nonmarkov_tv | nonmarkov_distortion")
      ->required();
  mechanize->add_option("--distortion", mech_distortion,
                        "cost matrix file (required for nonmarkov_distortion)");
  mechanize->add_option("-o,--out", mech_out, "output path (default stdout)");
  mechanize->add_option("--format", format_name,
                        "input format: auto|joint|conditional|records");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate privacy-utility tradeoff rows over an alpha grid");
  std::string sweep_input, sweep_grid = "0.05:1.0:0.05", sweep_distortion,
              sweep_out;
  std::vector<std::string> sweep_families;
  sweep->add_option("input", sweep_input, "dataset file")->required();
  sweep->add_option("--grid", sweep_grid,
                    "alpha grid, start:stop:step or comma list");
  sweep->add_option("--family", sweep_families,
                    "family (repeatable; default all three)");
  sweep->add_option("--distortion", sweep_distortion,
                    "cost matrix file (default 0/1 cost)");
  sweep->add_option("-o,--out", sweep_out, "output path (default stdout)");
  sweep->add_option("--base", base_name, "log base: bits|nats")
      ->check(CLI::IsMember({"bits", "nats"}));
  sweep->add_option("--format", format_name,
                    "input format: auto|joint|conditional|records");

  // sanitize
  auto* sanitize = app.add_subcommand(
      "sanitize", "Apply a mechanism file to a records file");
  std::string san_records, san_mechanism, san_out;
  std::uint64_t san_seed = 0;
  sanitize->add_option("records", san_records, "records file")->required();
  sanitize->add_option("--mechanism", san_mechanism, "mechanism file")
      ->required();
  sanitize->add_option("--seed", san_seed, "RNG seed")->required();
  sanitize->add_option("-o,--out", san_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inspect->parsed()) {
      linsan::cli::InspectOptions options;
      options.input_path = inspect_input;
      options.format = FormatFromFlag(format_name);
      if (inspect_alpha_option->count() > 0) options.alpha = inspect_alpha;
      options.nats = base_name == "nats";
      return linsan::cli::RunInspect(options, std::cout);
    }
    if (mechanize->parsed()) {
      linsan::cli::MechanizeOptions options;
      options.input_path = mech_input;
      options.format = FormatFromFlag(format_name);
      options.alpha = mech_alpha;
      options.family = mech_family;
      options.distortion_path = mech_distortion;
      options.out_path = mech_out;
      return linsan::cli::RunMechanize(options, std::cout);
    }
    if (sweep->parsed()) {
      linsan::cli::SweepOptions options;
      options.input_path = sweep_input;
      options.format = FormatFromFlag(format_name);
      options.grid = sweep_grid;
      options.families = sweep_families;
      options.distortion_path = sweep_distortion;
      options.out_path = sweep_out;
      options.nats = base_name == "nats";
      return linsan::cli::RunSweep(options, std::cout);
    }
    if (sanitize->parsed()) {
      linsan::cli::SanitizeOptions options;
      options.records_path = san_records;
      options.mechanism_path = san_mechanism;
      options.seed = san_seed;
      options.out_path = san_out;
      return linsan::cli::RunSanitize(options, std::cout);
    }
  } catch (const linsan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return linsan::cli::ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
