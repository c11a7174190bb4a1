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

#include "cli/instance_file.h"

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "bfm/error.h"
#include "bfm/valuations.h"

namespace bfm::cli {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::kParse, field + ": " + message);
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where + "." + key, "missing");
  return *it;
}

const Json& ArrayField(const Json& obj, const char* key,
                       const std::string& where) {
  const Json& value = Field(obj, key, where);
  if (!value.is_array()) Fail(where + "." + key, "expected an array");
  return value;
}

std::string StringId(const Json& value, const std::string& field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  Fail(field, "expected a string id");
}

// 1-based agent id to index, checked against n.
AgentIndex AgentRef(const Json& value, int n, const std::string& field) {
  if (!value.is_number_integer()) Fail(field, "expected an integer agent id");
  long long id = value.get<long long>();
  if (id < 1 || id > n) Fail(field, "unknown agent id " + std::to_string(id));
  return static_cast<AgentIndex>(id - 1);
}

Rational NonNegative(const Json& value, const std::string& field) {
  Rational r = ParseRationalField(value, field);
  if (r.sign() < 0) Fail(field, "negative value " + r.ToString());
  return r;
}

std::shared_ptr<const Valuation> ParseAdditive(const Json& payload, int n,
                                               const std::string& where) {
  std::vector<Rational> values(n);
  std::vector<char> seen(n, 0);
  const Json& list = ArrayField(payload, "values", where);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".values[" + std::to_string(k) + "]";
    AgentIndex a = AgentRef(Field(list[k], "agent", at), n, at + ".agent");
    if (seen[a]) Fail(at + ".agent", "duplicate agent " + std::to_string(a + 1));
    seen[a] = 1;
    values[a] = NonNegative(Field(list[k], "value", at), at + ".value");
  }
  return std::make_shared<AdditiveValuation>(std::move(values));
}

std::shared_ptr<const Valuation> ParseCoverage(const Json& payload, int n,
                                               const std::string& where) {
  std::vector<Rational> weights;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  const Json& elements = ArrayField(payload, "elements", where);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const std::string at = where + ".elements[" + std::to_string(k) + "]";
    std::string id = StringId(Field(elements[k], "id", at), at + ".id");
    if (index.count(id)) Fail(at + ".id", "duplicate element id '" + id + "'");
    index[id] = static_cast<int>(weights.size());
    names.push_back(id);
    weights.push_back(NonNegative(Field(elements[k], "weight", at),
                                  at + ".weight"));
  }
  std::vector<std::vector<int>> covers(n);
  std::vector<char> seen(n, 0);
  const Json& list = ArrayField(payload, "covers", where);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".covers[" + std::to_string(k) + "]";
    AgentIndex a = AgentRef(Field(list[k], "agent", at), n, at + ".agent");
    if (seen[a]) Fail(at + ".agent", "duplicate agent " + std::to_string(a + 1));
    seen[a] = 1;
    const Json& ids = ArrayField(list[k], "elements", at);
    std::set<int> mine;
    for (std::size_t e = 0; e < ids.size(); ++e) {
      const std::string ef = at + ".elements[" + std::to_string(e) + "]";
      std::string id = StringId(ids[e], ef);
      auto it = index.find(id);
      if (it == index.end()) Fail(ef, "unknown element '" + id + "'");
      mine.insert(it->second);
    }
    covers[a].assign(mine.begin(), mine.end());
  }
  return std::make_shared<CoverageValuation>(std::move(weights),
                                             std::move(covers),
                                             std::move(names));
}

// Task list shared by both matching kinds; values only for task_matching.
std::map<std::string, int> ParseTasks(const Json& payload,
                                      const std::string& where,
                                      bool with_values,
                                      std::vector<std::string>& names,
                                      std::vector<Rational>& values) {
  std::map<std::string, int> index;
  const Json& tasks = ArrayField(payload, "tasks", where);
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const std::string at = where + ".tasks[" + std::to_string(k) + "]";
    const Json& id_json = tasks[k].is_object() ? Field(tasks[k], "id", at)
                                               : tasks[k];
    std::string id = StringId(id_json, at + ".id");
    if (index.count(id)) Fail(at + ".id", "duplicate task id '" + id + "'");
    index[id] = static_cast<int>(names.size());
    names.push_back(id);
    if (with_values) {
      values.push_back(NonNegative(Field(tasks[k], "value", at), at + ".value"));
    }
  }
  return index;
}

int TaskRef(const Json& value, const std::map<std::string, int>& index,
            const std::string& field) {
  std::string id = StringId(value, field);
  auto it = index.find(id);
  if (it == index.end()) Fail(field, "unknown task '" + id + "'");
  return it->second;
}

std::shared_ptr<const Valuation> ParseMatching(const Json& payload, int n,
                                               const std::string& where) {
  std::vector<std::string> names;
  std::vector<Rational> unused;
  auto index = ParseTasks(payload, where, false, names, unused);
  std::vector<MatchingEdge> edges;
  std::set<std::pair<int, int>> seen;
  const Json& list = ArrayField(payload, "edges", where);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".edges[" + std::to_string(k) + "]";
    AgentIndex a = AgentRef(Field(list[k], "agent", at), n, at + ".agent");
    int t = TaskRef(Field(list[k], "task", at), index, at + ".task");
    if (!seen.insert({a, t}).second) Fail(at, "duplicate edge");
    edges.push_back({a, t, NonNegative(Field(list[k], "value", at),
                                       at + ".value")});
  }
  const int tasks = static_cast<int>(names.size());
  return std::make_shared<MatchingValuation>(n, tasks, std::move(edges),
                                             std::move(names));
}

std::shared_ptr<const Valuation> ParseTaskMatching(const Json& payload, int n,
                                                   const std::string& where) {
  std::vector<std::string> names;
  std::vector<Rational> values;
  auto index = ParseTasks(payload, where, true, names, values);
  std::vector<std::pair<AgentIndex, int>> edges;
  std::set<std::pair<int, int>> seen;
  const Json& list = ArrayField(payload, "edges", where);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = where + ".edges[" + std::to_string(k) + "]";
    AgentIndex a = AgentRef(Field(list[k], "agent", at), n, at + ".agent");
    int t = TaskRef(Field(list[k], "task", at), index, at + ".task");
    if (!seen.insert({a, t}).second) Fail(at, "duplicate edge");
    edges.emplace_back(a, t);
  }
  return std::make_shared<TaskValuedMatching>(n, std::move(values),
                                              std::move(edges),
                                              std::move(names));
}

}  // namespace

Rational ParseRationalField(const Json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string()) Fail(field, "expected a \"p/q\" string");
  try {
    return Rational::Parse(value.get<std::string>());
  } catch (const Error&) {
    Fail(field, "malformed rational '" + value.get<std::string>() + "'");
  }
}

Instance ParseInstance(const Json& doc) {
  const Json& version = Field(doc, "version", "instance");
  if (!version.is_number_integer() ||
      version.get<long long>() != kInstanceFileVersion) {
    Fail("version", "expected " + std::to_string(kInstanceFileVersion) +
                        ", got " + version.dump());
  }
  Rational budget = ParseRationalField(Field(doc, "budget", "instance"),
                                       "budget");
  if (budget.sign() <= 0) Fail("budget", "must be positive");

  const Json& agents = ArrayField(doc, "agents", "instance");
  const int n = static_cast<int>(agents.size());
  if (n > kMaxAgents) Fail("agents", "too many agents");
  std::vector<Rational> costs(n);
  std::vector<char> seen(n, 0);
  for (int k = 0; k < n; ++k) {
    const std::string at = "agents[" + std::to_string(k) + "]";
    const Json& id = Field(agents[k], "id", at);
    if (!id.is_number_integer()) Fail(at + ".id", "expected an integer");
    long long v = id.get<long long>();
    if (v < 1 || v > n) {
      Fail(at + ".id", "ids must run from 1 to " + std::to_string(n) +
                           ", got " + std::to_string(v));
    }
    if (seen[v - 1]) Fail(at + ".id", "duplicate id " + std::to_string(v));
    seen[v - 1] = 1;
    Rational cost = ParseRationalField(Field(agents[k], "cost", at),
                                       at + ".cost");
    if (cost.sign() < 0) Fail(at + ".cost", "negative cost " + cost.ToString());
    costs[v - 1] = cost;
  }

  const Json& valuation = Field(doc, "valuation", "instance");
  const Json& kind_json = Field(valuation, "kind", "valuation");
  if (!kind_json.is_string()) Fail("valuation.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  const Json& payload = Field(valuation, "payload", "valuation");
  std::shared_ptr<const Valuation> v;
  try {
    if (kind == "additive") {
      v = ParseAdditive(payload, n, "valuation.payload");
    } else if (kind == "coverage") {
      v = ParseCoverage(payload, n, "valuation.payload");
    } else if (kind == "matching") {
      v = ParseMatching(payload, n, "valuation.payload");
    } else if (kind == "task_matching") {
      v = ParseTaskMatching(payload, n, "valuation.payload");
    } else {
      Fail("valuation.kind", "unknown kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    Fail("valuation.payload", e.what());
  }
  return Instance(std::move(costs), std::move(budget), std::move(v));
}

Instance ParseInstanceText(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail("instance", std::string("invalid JSON: ") + e.what());
  }
  return ParseInstance(doc);
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceText(buffer.str());
}

Json InstanceToJson(const Instance& instance) {
  Json doc;
  doc["version"] = kInstanceFileVersion;
  doc["budget"] = instance.budget().ToString();
  Json agents = Json::array();
  for (int i = 0; i < instance.n(); ++i) {
    agents.push_back({{"id", i + 1}, {"cost", instance.cost(i).ToString()}});
  }
  doc["agents"] = agents;

  const Valuation& v = instance.valuation();
  Json payload;
  if (const auto* add = dynamic_cast<const AdditiveValuation*>(&v)) {
    Json values = Json::array();
    for (int i = 0; i < instance.n(); ++i) {
      values.push_back(
          {{"agent", i + 1}, {"value", add->values()[i].ToString()}});
    }
    payload["values"] = values;
  } else if (const auto* cov = dynamic_cast<const CoverageValuation*>(&v)) {
    Json elements = Json::array();
    for (std::size_t e = 0; e < cov->weights().size(); ++e) {
      elements.push_back({{"id", cov->element_names()[e]},
                          {"weight", cov->weights()[e].ToString()}});
    }
    Json covers = Json::array();
    for (int i = 0; i < instance.n(); ++i) {
      Json ids = Json::array();
      for (int e : cov->covers()[i]) ids.push_back(cov->element_names()[e]);
      covers.push_back({{"agent", i + 1}, {"elements", ids}});
    }
    payload["elements"] = elements;
    payload["covers"] = covers;
  } else if (const auto* tm = dynamic_cast<const TaskValuedMatching*>(&v)) {
    Json tasks = Json::array();
    for (int t = 0; t < tm->num_tasks(); ++t) {
      tasks.push_back({{"id", tm->task_names()[t]},
                       {"value", tm->task_values()[t].ToString()}});
    }
    Json edges = Json::array();
    for (const auto& [agent, task] : tm->agent_edges()) {
      edges.push_back({{"agent", agent + 1}, {"task", tm->task_names()[task]}});
    }
    payload["tasks"] = tasks;
    payload["edges"] = edges;
  } else if (const auto* mv = dynamic_cast<const MatchingValuation*>(&v)) {
    Json tasks = Json::array();
    for (int t = 0; t < mv->num_tasks(); ++t) {
      tasks.push_back({{"id", mv->task_names()[t]}});
    }
    Json edges = Json::array();
    for (const MatchingEdge& e : mv->edges()) {
      edges.push_back({{"agent", e.agent + 1},
                       {"task", mv->task_names()[e.task]},
                       {"value", e.value.ToString()}});
    }
    payload["tasks"] = tasks;
    payload["edges"] = edges;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot serialize valuation kind " + std::string(v.kind()));
  }
  doc["valuation"] = {{"kind", std::string(v.kind())}, {"payload", payload}};
  return doc;
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << InstanceToJson(instance).dump(2) << "\n";
}

}  // namespace bfm::cli
