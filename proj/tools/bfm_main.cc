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

// bfm: generate instances, run mechanisms, inspect payments, verify.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bfm/bfm.h"
#include "cli/experiment.h"
#include "cli/generator.h"
#include "cli/instance_file.h"
#include "cli/report.h"
#include "cli/spec_json.h"

namespace {

using bfm::Rational;
using namespace bfm::cli;

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct MechanismFlags {
  std::vector<std::string> names;
  std::string gamma;
  std::string alpha;
  std::string oracle;
  std::string rating;
  bool matching_stop = false;
  int seed_size = 3;

  void Attach(CLI::App* app, bool many) {
    auto* opt = app->add_option("--mechanism,-m", names, "mechanism kind");
    if (!many) opt->expected(1);
    app->add_option("--gamma", gamma, "threshold parameter p/q");
    app->add_option("--alpha", alpha, "oracle fraction p/q");
    app->add_option("--oracle", oracle, "exhaustive or greedy3")
        ->check(CLI::IsMember({"exhaustive", "greedy3"}));
    app->add_option("--rating", rating, "oracle ratio used in random_om p/q");
    app->add_flag("--matching-stop", matching_stop,
                  "stop at the first zero-marginal agent");
    app->add_option("--seed-size", seed_size, "greedy3 enumeration size")
        ->check(CLI::Range(1, 3));
  }

  std::vector<bfm::MechanismSpec> Specs() const {
    std::vector<bfm::MechanismSpec> out;
    for (const auto& name : names) {
      bfm::MechanismSpec spec;
      spec.kind = bfm::ParseKind(name);
      if (!gamma.empty()) spec.gamma = Rational::Parse(gamma);
      if (!alpha.empty()) spec.alpha = Rational::Parse(alpha);
      if (!oracle.empty()) spec.oracle = bfm::ParseOracle(oracle);
      if (!rating.empty()) spec.rating = Rational::Parse(rating);
      spec.matching_stop = matching_stop;
      spec.seed_size = seed_size;
      out.push_back(spec);
    }
    return out;
  }

  bfm::MechanismSpec Single() const {
    auto specs = Specs();
    if (specs.size() != 1) {
      throw bfm::Error(bfm::ErrorCode::kInvalidArgument,
                       "exactly one --mechanism is required");
    }
    return specs.front();
  }
};

struct GeneratorFlags {
  std::string family;
  int n = 0;
  int n_max = 0;
  std::string theta_cap;
  std::string config;

  void Attach(CLI::App* app) {
    app->add_option("--family", family,
                    "additive, coverage, matching or task_matching");
    app->add_option("--n", n, "agents (or lower end with --n-max)");
    app->add_option("--n-max", n_max, "upper end of the agent count");
    app->add_option("--theta-cap", theta_cap,
                    "large-market cap on max_i v(i)/opt, p/q");
    app->add_option("--generator", config, "generator spec JSON file");
  }

  bool Given() const {
    return !family.empty() || n > 0 || !theta_cap.empty() || !config.empty();
  }

  GeneratorSpec Build(std::optional<GeneratorSpec> base) const {
    GeneratorSpec spec = base.value_or(GeneratorSpec{});
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) {
        throw bfm::Error(bfm::ErrorCode::kInvalidArgument,
                         "cannot open " + config);
      }
      spec = ParseGeneratorSpec(Json::parse(in), "generator");
    }
    if (!family.empty()) spec.family = family;
    if (n > 0) spec.n_min = spec.n_max = n;
    if (n_max > 0) spec.n_max = n_max;
    if (!theta_cap.empty()) spec.theta_cap = Rational::Parse(theta_cap);
    ValidateGeneratorSpec(spec);
    return spec;
  }
};

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw bfm::Error(bfm::ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << text;
}

int RunGen(const GeneratorFlags& gen, std::uint64_t seed, int count,
           const std::string& out_dir) {
  GeneratorSpec spec = gen.Build(std::nullopt);
  spec.seed = seed;
  if (count > 1 && out_dir.empty()) {
    throw bfm::Error(bfm::ErrorCode::kInvalidArgument,
                     "--count > 1 needs --out-dir");
  }
  for (int k = 0; k < count; ++k) {
    bfm::Instance instance = GenerateInstance(spec, k);
    const std::string text = InstanceToJson(instance).dump(2) + "\n";
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      std::filesystem::create_directories(out_dir);
      Emit(text, (std::filesystem::path(out_dir) /
                  ("instance_" + std::to_string(k) + ".json"))
                     .string());
    }
  }
  return 0;
}

int RunBench(const GeneratorFlags& gen, const MechanismFlags& mech,
             std::uint64_t seed, int trials) {
  GeneratorSpec spec = gen.Build(std::nullopt);
  spec.seed = seed;
  auto specs = mech.Specs();
  if (specs.empty()) {
    specs.push_back(bfm::MechanismSpec{});
  }
  std::vector<bfm::Instance> instances;
  for (int k = 0; k < trials; ++k) instances.push_back(GenerateInstance(spec, k));
  std::printf("mechanism,instances,allocate_ms,payments_ms,verify_ms\n");
  for (const auto& s : specs) {
    bfm::Mechanism mechanism(s);
    double ms[3] = {0, 0, 0};
    for (const auto& instance : instances) {
      auto t0 = std::chrono::steady_clock::now();
      mechanism.Allocate(instance);
      auto t1 = std::chrono::steady_clock::now();
      bfm::PaymentsForOutcome(mechanism, instance);
      auto t2 = std::chrono::steady_clock::now();
      bfm::Verify(mechanism, instance);
      auto t3 = std::chrono::steady_clock::now();
      using Ms = std::chrono::duration<double, std::milli>;
      ms[0] += Ms(t1 - t0).count();
      ms[1] += Ms(t2 - t1).count();
      ms[2] += Ms(t3 - t2).count();
    }
    std::printf("\"%s\",%zu,%.3f,%.3f,%.3f\n", s.ToString().c_str(),
                instances.size(), ms[0], ms[1], ms[2]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-feasible procurement mechanisms"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string format;
  bool sample = false;

  // gen
  GeneratorFlags gen_flags;
  int gen_count = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen_flags.Attach(gen);
  gen->add_option("--seed", seed, "stream seed");
  gen->add_option("--count", gen_count, "instances to write")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out-dir", gen_out, "directory for instance_<k>.json");

  // run
  std::string run_config;
  std::vector<std::string> run_instances;
  std::optional<int> run_trials;
  std::string run_output;
  std::optional<std::uint64_t> run_seed;
  bool no_verify = false;
  int threads = 0;
  GeneratorFlags run_gen;
  MechanismFlags run_mech;
  auto* run = app.add_subcommand("run", "run an experiment");
  run->add_option("--config", run_config, "experiment config JSON");
  run->add_option("--instance", run_instances, "instance files");
  run->add_option("--seed", run_seed, "experiment seed");
  run->add_option("--trials", run_trials, "generated instances");
  run->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--output,-o", run_output, "report path (default stdout)");
  run->add_flag("--sample", sample, "draw one branch per randomized outcome");
  run->add_flag("--no-verify", no_verify, "skip verification checks");
  run->add_option("--threads", threads, "worker threads (0 = all cores)");
  run_gen.Attach(run);
  run_mech.Attach(run, true);

  // verify / payments
  std::string instance_path;
  MechanismFlags verify_mech;
  auto* verify = app.add_subcommand("verify", "verify one mechanism");
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify_mech.Attach(verify, false);

  MechanismFlags pay_mech;
  auto* payments = app.add_subcommand("payments", "threshold payments");
  payments->add_option("--instance", instance_path, "instance file")
      ->required();
  payments->add_flag("--sample", sample, "also draw one branch");
  payments->add_option("--seed", seed, "sampling seed");
  pay_mech.Attach(payments, false);

  // bench
  GeneratorFlags bench_gen;
  MechanismFlags bench_mech;
  int bench_trials = 20;
  auto* bench = app.add_subcommand("bench", "time mechanisms");
  bench_gen.Attach(bench);
  bench_mech.Attach(bench, true);
  bench->add_option("--seed", seed, "stream seed");
  bench->add_option("--trials", bench_trials, "instances")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return RunGen(gen_flags, seed, gen_count, gen_out);
    if (bench->parsed()) {
      return RunBench(bench_gen, bench_mech, seed, bench_trials);
    }
    if (verify->parsed()) {
      bfm::Instance instance = LoadInstance(instance_path);
      bfm::Mechanism mechanism(verify_mech.Single());
      bfm::VerificationReport report = bfm::Verify(mechanism, instance);
      std::cout << VerificationToJson(report).dump(2) << "\n";
      return report.AllPassed() ? 0 : kExitCheckFailed;
    }
    if (payments->parsed()) {
      bfm::Instance instance = LoadInstance(instance_path);
      const bfm::MechanismSpec spec = pay_mech.Single();
      bfm::Mechanism mechanism(spec);
      auto outcome = bfm::PaymentsForOutcome(mechanism, instance);
      Json doc = PaymentsToJson(instance, spec, outcome);
      if (sample) {
        ReportRow row = EvaluateCell(instance_path, instance, spec, false,
                                     SplitMix64(seed));
        doc["sample"] = RowToJson(row)["sample"];
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    // run
    ExperimentConfig config;
    if (!run_config.empty()) config = LoadExperimentConfig(run_config);
    if (run_seed) config.seed = *run_seed;
    if (run_trials) config.trials = *run_trials;
    if (run_gen.Given()) config.generator = run_gen.Build(config.generator);
    for (const auto& p : run_instances) config.instances.push_back(p);
    for (const auto& s : run_mech.Specs()) config.mechanisms.push_back(s);
    if (!format.empty()) config.format = format;
    if (sample) config.sample = true;
    if (no_verify) config.verify = false;
    if (threads > 0) config.threads = threads;
    if (!run_output.empty()) config.output = run_output;

    auto rows = RunExperiment(config);
    std::ostringstream text;
    WriteReport(rows, config.format, text);
    Emit(text.str(), config.output);
    for (const auto& row : rows) {
      if (!row.Passed()) return kExitCheckFailed;
    }
    return 0;
  } catch (const bfm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
