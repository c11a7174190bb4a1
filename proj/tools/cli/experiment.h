// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BFM_TOOLS_CLI_EXPERIMENT_H_
#define BFM_TOOLS_CLI_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfm/mechanisms.h"
#include "bfm/verify.h"
#include "cli/generator.h"
#include "cli/instance_file.h"

namespace bfm::cli {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int trials = 1;
  std::optional<GeneratorSpec> generator;
  std::vector<std::string> instances;
  std::vector<MechanismSpec> mechanisms;
  bool verify = true;
  bool sample = false;
  std::string format = "json";
  std::string output;  // empty: stdout
  int threads = 0;     // 0: hardware concurrency
};

// Relative instance paths resolve against `base_dir`.
ExperimentConfig ParseExperimentConfig(const Json& doc,
                                       const std::string& base_dir = "");
ExperimentConfig LoadExperimentConfig(const std::string& path);
Json ExperimentConfigToJson(const ExperimentConfig& config);

struct NamedInstance {
  std::string name;
  Instance instance;
};

// Generated instances first ("gen:<k>"), then files in the listed order.
std::vector<NamedInstance> BuildInstances(const ExperimentConfig& config);

struct SampledBranch {
  std::size_t branch = 0;
  Rational draw;
};

struct ReportRow {
  std::string instance;
  std::string digest;
  int n = 0;
  Rational budget;
  std::string mechanism;
  RandomizedOutcome outcome;
  RatioResult ratio;
  std::vector<CheckResult> checks;
  std::optional<SampledBranch> sampled;

  bool Passed() const;
  Rational MaxTotalPayment() const;
};

// One row per (instance, mechanism), ordered by instance then mechanism.
std::vector<ReportRow> RunExperiment(const ExperimentConfig& config);
std::vector<ReportRow> RunExperiment(const ExperimentConfig& config,
                                     const std::vector<NamedInstance>& instances);

// One (instance, mechanism) cell.
ReportRow EvaluateCell(const std::string& name, const Instance& instance,
                       const MechanismSpec& spec, bool verify,
                       std::optional<std::uint64_t> sample_seed);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_CLI_EXPERIMENT_H_
