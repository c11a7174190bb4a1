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

#include "cli/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "bfm/error.h"
#include "bfm/payments.h"
#include "cli/spec_json.h"

namespace bfm::cli {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::kParse, field + ": " + message);
}

std::size_t PickBranch(const RandomizedOutcome& outcome, const Rational& u) {
  Rational acc;
  for (std::size_t k = 0; k < outcome.branches.size(); ++k) {
    acc += outcome.branches[k].probability;
    if (u < acc) return k;
  }
  return outcome.branches.size() - 1;
}

}  // namespace

bool ReportRow::Passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

Rational ReportRow::MaxTotalPayment() const {
  Rational best;
  for (const auto& b : outcome.branches) {
    best = Max(best, b.outcome.TotalPayment());
  }
  return best;
}

ExperimentConfig ParseExperimentConfig(const Json& doc,
                                       const std::string& base_dir) {
  if (!doc.is_object()) Fail("config", "expected an object");
  ExperimentConfig config;
  try {
    config.seed = doc.value("seed", config.seed);
    config.trials = doc.value("trials", config.trials);
    config.verify = doc.value("verify", config.verify);
    config.sample = doc.value("sample", config.sample);
    config.format = doc.value("format", config.format);
    config.output = doc.value("output", config.output);
    config.threads = doc.value("threads", config.threads);
  } catch (const nlohmann::json::exception& e) {
    Fail("config", e.what());
  }
  if (config.trials < 0) Fail("trials", "must be non-negative");
  if (config.format != "json" && config.format != "csv") {
    Fail("format", "expected csv or json, got '" + config.format + "'");
  }
  if (doc.contains("generator")) {
    config.generator = ParseGeneratorSpec(doc["generator"], "generator");
  }
  if (doc.contains("instances")) {
    const Json& list = doc["instances"];
    if (!list.is_array()) Fail("instances", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (!list[k].is_string()) {
        Fail("instances[" + std::to_string(k) + "]", "expected a path");
      }
      std::filesystem::path p = list[k].get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      config.instances.push_back(p.string());
    }
  }
  if (doc.contains("mechanisms")) {
    const Json& list = doc["mechanisms"];
    if (!list.is_array()) Fail("mechanisms", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      config.mechanisms.push_back(ParseMechanismSpec(
          list[k], "mechanisms[" + std::to_string(k) + "]"));
    }
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    Fail("config", std::string("invalid JSON: ") + e.what());
  }
  return ParseExperimentConfig(
      doc, std::filesystem::path(path).parent_path().string());
}

Json ExperimentConfigToJson(const ExperimentConfig& config) {
  Json doc;
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  if (config.generator) doc["generator"] = GeneratorSpecToJson(*config.generator);
  doc["instances"] = config.instances;
  Json mechanisms = Json::array();
  for (const auto& m : config.mechanisms) {
    mechanisms.push_back(MechanismSpecToJson(m));
  }
  doc["mechanisms"] = mechanisms;
  doc["verify"] = config.verify;
  doc["sample"] = config.sample;
  doc["format"] = config.format;
  if (!config.output.empty()) doc["output"] = config.output;
  return doc;
}

std::vector<NamedInstance> BuildInstances(const ExperimentConfig& config) {
  std::vector<NamedInstance> out;
  if (config.generator) {
    GeneratorSpec spec = *config.generator;
    spec.seed = config.seed;
    for (int k = 0; k < config.trials; ++k) {
      out.push_back({"gen:" + std::to_string(k),
                     GenerateInstance(spec, static_cast<std::uint64_t>(k))});
    }
  }
  for (const auto& path : config.instances) {
    out.push_back({path, LoadInstance(path)});
  }
  return out;
}

ReportRow EvaluateCell(const std::string& name, const Instance& instance,
                       const MechanismSpec& spec, bool verify,
                       std::optional<std::uint64_t> sample_seed) {
  Mechanism mechanism(spec);
  ReportRow row;
  row.instance = name;
  row.digest = InstanceDigest(instance);
  row.n = instance.n();
  row.budget = instance.budget();
  row.mechanism = spec.ToString();
  if (verify) {
    VerificationReport report = Verify(mechanism, instance, &row.outcome);
    row.checks = std::move(report.checks);
    row.ratio = report.ratio;
  } else {
    row.outcome = PaymentsForOutcome(mechanism, instance);
    row.ratio = EmpiricalRatio(instance, row.outcome);
  }
  if (sample_seed) {
    Sampler rng(*sample_seed);
    SampledBranch s;
    s.draw = rng.Unit();
    s.branch = PickBranch(row.outcome, s.draw);
    row.sampled = s;
  }
  return row;
}

std::vector<ReportRow> RunExperiment(const ExperimentConfig& config) {
  return RunExperiment(config, BuildInstances(config));
}

std::vector<ReportRow> RunExperiment(
    const ExperimentConfig& config,
    const std::vector<NamedInstance>& instances) {
  const std::size_t m = config.mechanisms.size();
  const std::size_t cells = instances.size() * m;
  std::vector<ReportRow> rows(cells);
  if (cells == 0) return rows;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cells) return;
      const std::size_t i = k / m;
      const std::size_t j = k % m;
      std::optional<std::uint64_t> sample_seed;
      if (config.sample) {
        sample_seed = SplitMix64(SplitMix64(config.seed) + k);
      }
      try {
        rows[k] = EvaluateCell(instances[i].name, instances[i].instance,
                               config.mechanisms[j], config.verify,
                               sample_seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(cells);
        return;
      }
    }
  };
  unsigned threads = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cells));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace bfm::cli
