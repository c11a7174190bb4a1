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

#include "cli/spec_json.h"

#include "bfm/error.h"

namespace bfm::cli {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::kParse, field + ": " + message);
}

void RequireObject(const Json& doc, const std::string& field) {
  if (!doc.is_object()) Fail(field, "expected an object");
}

template <typename T>
T Get(const Json& doc, const char* key, const std::string& field, T fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    Fail(field + "." + key, "wrong type");
  }
}

IntRange ParseRange(const Json& doc, const std::string& field,
                    IntRange fallback) {
  RequireObject(doc, field);
  IntRange r;
  r.lo = Get<std::int64_t>(doc, "lo", field, fallback.lo);
  r.hi = Get<std::int64_t>(doc, "hi", field, fallback.hi);
  r.den = Get<std::int64_t>(doc, "den", field, fallback.den);
  return r;
}

Json RangeToJson(const IntRange& r) {
  return {{"lo", r.lo}, {"hi", r.hi}, {"den", r.den}};
}

}  // namespace

MechanismSpec ParseMechanismSpec(const Json& doc, const std::string& field) {
  MechanismSpec spec;
  try {
    if (doc.is_string()) {
      spec.kind = ParseKind(doc.get<std::string>());
      return spec;
    }
    RequireObject(doc, field);
    auto kind = doc.find("kind");
    if (kind == doc.end() || !kind->is_string()) Fail(field + ".kind", "missing");
    spec.kind = ParseKind(kind->get<std::string>());
    if (doc.contains("gamma")) {
      spec.gamma = ParseRationalField(doc["gamma"], field + ".gamma");
    }
    if (doc.contains("alpha")) {
      spec.alpha = ParseRationalField(doc["alpha"], field + ".alpha");
    }
    if (doc.contains("oracle")) {
      spec.oracle = ParseOracle(Get<std::string>(doc, "oracle", field, ""));
    }
    if (doc.contains("rating")) {
      spec.rating = ParseRationalField(doc["rating"], field + ".rating");
    }
    spec.matching_stop = Get<bool>(doc, "matching_stop", field, false);
    spec.seed_size = Get<int>(doc, "seed_size", field, spec.seed_size);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    Fail(field, e.what());
  }
  return spec;
}

Json MechanismSpecToJson(const MechanismSpec& spec) {
  Json doc;
  doc["kind"] = std::string(KindName(spec.kind));
  if (spec.UsesGamma()) doc["gamma"] = spec.gamma.ToString();
  if (spec.UsesAlpha()) doc["alpha"] = spec.alpha.ToString();
  if (spec.UsesOracle()) {
    doc["oracle"] = std::string(OracleName(spec.oracle));
    if (spec.oracle == OracleKind::kGreedy3) doc["seed_size"] = spec.seed_size;
  }
  if (spec.rating) doc["rating"] = spec.rating->ToString();
  doc["matching_stop"] = spec.matching_stop;
  return doc;
}

GeneratorSpec ParseGeneratorSpec(const Json& doc, const std::string& field) {
  RequireObject(doc, field);
  GeneratorSpec spec;
  spec.family = Get<std::string>(doc, "family", field, spec.family);
  if (auto it = doc.find("n"); it != doc.end()) {
    if (it->is_number_integer()) {
      spec.n_min = spec.n_max = it->get<int>();
    } else if (it->is_array() && it->size() == 2 &&
               (*it)[0].is_number_integer() && (*it)[1].is_number_integer()) {
      spec.n_min = (*it)[0].get<int>();
      spec.n_max = (*it)[1].get<int>();
    } else {
      Fail(field + ".n", "expected an integer or [lo, hi]");
    }
  }
  if (doc.contains("cost")) {
    spec.cost = ParseRange(doc["cost"], field + ".cost", spec.cost);
  }
  if (doc.contains("value")) {
    spec.value = ParseRange(doc["value"], field + ".value", spec.value);
  }
  if (doc.contains("budget_fraction")) {
    spec.budget_fraction = ParseRange(doc["budget_fraction"],
                                      field + ".budget_fraction",
                                      spec.budget_fraction);
  }
  spec.elements = Get<int>(doc, "elements", field, spec.elements);
  spec.tasks = Get<int>(doc, "tasks", field, spec.tasks);
  if (doc.contains("density")) {
    Rational d = ParseRationalField(doc["density"], field + ".density");
    if (!d.is_small()) Fail(field + ".density", "too large");
    spec.density_num = d.small_num();
    spec.density_den = d.small_den();
  }
  if (doc.contains("theta_cap") && !doc["theta_cap"].is_null()) {
    spec.theta_cap = ParseRationalField(doc["theta_cap"], field + ".theta_cap");
  }
  spec.seed = Get<std::uint64_t>(doc, "seed", field, spec.seed);
  spec.max_attempts = Get<int>(doc, "max_attempts", field, spec.max_attempts);
  try {
    ValidateGeneratorSpec(spec);
  } catch (const Error& e) {
    Fail(field, e.what());
  }
  return spec;
}

Json GeneratorSpecToJson(const GeneratorSpec& spec) {
  Json doc;
  doc["family"] = spec.family;
  if (spec.n_min == spec.n_max) {
    doc["n"] = spec.n_min;
  } else {
    doc["n"] = {spec.n_min, spec.n_max};
  }
  doc["cost"] = RangeToJson(spec.cost);
  doc["value"] = RangeToJson(spec.value);
  doc["budget_fraction"] = RangeToJson(spec.budget_fraction);
  if (spec.family == "coverage") doc["elements"] = spec.elements;
  if (spec.family == "matching" || spec.family == "task_matching") {
    doc["tasks"] = spec.tasks;
  }
  doc["density"] = Rational(spec.density_num, spec.density_den).ToString();
  if (spec.theta_cap) doc["theta_cap"] = spec.theta_cap->ToString();
  doc["seed"] = spec.seed;
  doc["max_attempts"] = spec.max_attempts;
  return doc;
}

}  // namespace bfm::cli
