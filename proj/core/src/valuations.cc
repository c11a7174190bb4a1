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

#include "bfm/valuations.h"

#include <algorithm>
#include <limits>

#include "bfm/assignment.h"
#include "bfm/error.h"

namespace bfm {
namespace {

void RequireNonNegative(const Rational& r, const std::string& what) {
  if (r.sign() < 0) {
    throw Error(ErrorCode::kInvalidArgument, what + " must be non-negative");
  }
}

std::string JoinRationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += values[i].ToString();
  }
  return out;
}

std::vector<std::string> DefaultNames(std::vector<std::string> names,
                                      std::size_t count, char prefix) {
  if (names.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      names.push_back(std::string(1, prefix) + std::to_string(i + 1));
    }
  }
  if (names.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "name list size mismatch");
  }
  return names;
}

// Common denominator of a list of rationals.
mpz_class Lcm(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const Rational& r : values) {
    mpz_class d = r.ToMpq().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace

AdditiveValuation::AdditiveValuation(std::vector<Rational> values)
    : Valuation(static_cast<int>(values.size())), values_(std::move(values)) {
  for (const Rational& v : values_) RequireNonNegative(v, "item value");
}

Rational AdditiveValuation::Compute(const AgentSet& s) const {
  Rational total;
  s.ForEach([&](AgentIndex a) { total += values_[a]; });
  return total;
}

std::string AdditiveValuation::CanonicalForm() const {
  return "additive[" + JoinRationals(values_) + "]";
}

CoverageValuation::CoverageValuation(std::vector<Rational> weights,
                                     std::vector<std::vector<int>> covers,
                                     std::vector<std::string> element_names)
    : Valuation(static_cast<int>(covers.size())),
      weights_(std::move(weights)),
      covers_(std::move(covers)),
      names_(DefaultNames(std::move(element_names), weights_.size(), 'e')) {
  for (const Rational& w : weights_) RequireNonNegative(w, "element weight");
  words_ = static_cast<int>((weights_.size() + 63) / 64);
  cover_bits_.assign(covers_.size(), std::vector<std::uint64_t>(words_, 0));
  for (std::size_t a = 0; a < covers_.size(); ++a) {
    for (int e : covers_[a]) {
      if (e < 0 || e >= static_cast<int>(weights_.size())) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cover references unknown element " + std::to_string(e));
      }
      cover_bits_[a][e >> 6] |= std::uint64_t{1} << (e & 63);
    }
  }
}

Rational CoverageValuation::Compute(const AgentSet& s) const {
  std::vector<std::uint64_t> covered(words_, 0);
  s.ForEach([&](AgentIndex a) {
    for (int w = 0; w < words_; ++w) covered[w] |= cover_bits_[a][w];
  });
  Rational total;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = covered[w];
    while (bits != 0) {
      total += weights_[w * 64 + std::countr_zero(bits)];
      bits &= bits - 1;
    }
  }
  return total;
}

std::string CoverageValuation::CanonicalForm() const {
  std::string out = "coverage[" + JoinRationals(weights_) + "]";
  for (const auto& c : covers_) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    out += "(";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(sorted[i]);
    }
    out += ")";
  }
  return out;
}

MatchingValuation::MatchingValuation(int num_agents, int num_tasks,
                                     std::vector<MatchingEdge> edges,
                                     std::vector<std::string> task_names)
    : Valuation(num_agents),
      num_tasks_(num_tasks),
      edges_(std::move(edges)),
      names_(DefaultNames(std::move(task_names), num_tasks, 't')) {
  if (num_tasks < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative task count");
  }
  weight_.assign(num_agents, std::vector<Rational>(num_tasks));
  has_edge_.assign(num_agents, std::vector<char>(num_tasks, 0));
  for (const MatchingEdge& e : edges_) {
    if (e.agent < 0 || e.agent >= num_agents || e.task < 0 ||
        e.task >= num_tasks) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    RequireNonNegative(e.value, "edge value");
    if (!has_edge_[e.agent][e.task] || weight_[e.agent][e.task] < e.value) {
      weight_[e.agent][e.task] = e.value;
    }
    has_edge_[e.agent][e.task] = 1;
  }

  std::vector<Rational> all;
  Rational max_weight;
  for (const MatchingEdge& e : edges_) {
    all.push_back(e.value);
    max_weight = Max(max_weight, e.value);
  }
  mpz_class l = Lcm(all);
  // Potentials stay within a small multiple of the total matched weight.
  mpq_class bound = max_weight.ToMpq() * l * (num_agents + num_tasks + 2) * 4;
  if (bound < mpq_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    scale_ = Rational(mpq_class(l));
    std::vector<std::vector<std::int64_t>> scaled(
        num_agents, std::vector<std::int64_t>(num_tasks, 0));
    for (int a = 0; a < num_agents; ++a) {
      for (int t = 0; t < num_tasks; ++t) {
        mpq_class q = weight_[a][t].ToMpq() * l;
        scaled[a][t] = q.get_num().get_si();
      }
    }
    scaled_ = std::move(scaled);
  }
}

Rational MatchingValuation::Compute(const AgentSet& s) const {
  std::vector<AgentIndex> rows = s.Members();
  const int k = static_cast<int>(rows.size());
  if (k == 0 || num_tasks_ == 0) return Rational();
  const int cols = num_tasks_ + k;
  if (scaled_) {
    std::vector<std::vector<std::int64_t>> w(k,
                                             std::vector<std::int64_t>(cols));
    for (int r = 0; r < k; ++r) {
      std::copy((*scaled_)[rows[r]].begin(), (*scaled_)[rows[r]].end(),
                w[r].begin());
    }
    std::vector<int> col = SolveMaxAssignment(w);
    std::int64_t total = 0;
    for (int r = 0; r < k; ++r) {
      if (col[r] < num_tasks_) total += w[r][col[r]];
    }
    return Rational(total) / scale_;
  }
  std::vector<std::vector<Rational>> w(k, std::vector<Rational>(cols));
  for (int r = 0; r < k; ++r) {
    std::copy(weight_[rows[r]].begin(), weight_[rows[r]].end(), w[r].begin());
  }
  std::vector<int> col = SolveMaxAssignment(w);
  Rational total;
  for (int r = 0; r < k; ++r) {
    if (col[r] < num_tasks_) total += w[r][col[r]];
  }
  return total;
}

std::map<AgentIndex, int> MatchingValuation::MaxMatching(
    const AgentSet& s) const {
  std::vector<AgentIndex> rows = s.Members();
  const int k = static_cast<int>(rows.size());
  std::map<AgentIndex, int> out;
  if (k == 0 || num_tasks_ == 0) return out;
  std::vector<std::vector<Rational>> w(k,
                                       std::vector<Rational>(num_tasks_ + k));
  for (int r = 0; r < k; ++r) {
    std::copy(weight_[rows[r]].begin(), weight_[rows[r]].end(), w[r].begin());
  }
  std::vector<int> col = SolveMaxAssignment(w);
  for (int r = 0; r < k; ++r) {
    if (col[r] < num_tasks_ && has_edge_[rows[r]][col[r]]) {
      out[rows[r]] = col[r];
    }
  }
  return out;
}

std::string MatchingValuation::CanonicalForm() const {
  std::string out = "matching[" + std::to_string(num_tasks_) + "]";
  std::vector<MatchingEdge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(),
            [](const MatchingEdge& x, const MatchingEdge& y) {
              if (x.agent != y.agent) return x.agent < y.agent;
              if (x.task != y.task) return x.task < y.task;
              return x.value < y.value;
            });
  for (const MatchingEdge& e : sorted) {
    out += "(" + std::to_string(e.agent) + "," + std::to_string(e.task) +
           "," + e.value.ToString() + ")";
  }
  return out;
}

namespace {

std::vector<MatchingEdge> TaskEdges(
    const std::vector<Rational>& task_values,
    const std::vector<std::pair<AgentIndex, int>>& edges) {
  std::vector<MatchingEdge> out;
  for (const auto& [agent, task] : edges) {
    if (task < 0 || task >= static_cast<int>(task_values.size())) {
      throw Error(ErrorCode::kInvalidArgument, "edge task out of range");
    }
    out.push_back({agent, task, task_values[task]});
  }
  return out;
}

}  // namespace

TaskValuedMatching::TaskValuedMatching(
    int num_agents, std::vector<Rational> task_values,
    std::vector<std::pair<AgentIndex, int>> edges,
    std::vector<std::string> task_names)
    : MatchingValuation(num_agents, static_cast<int>(task_values.size()),
                        TaskEdges(task_values, edges), std::move(task_names)),
      task_values_(std::move(task_values)),
      agent_edges_(std::move(edges)) {}

std::string TaskValuedMatching::CanonicalForm() const {
  return "task_" + MatchingValuation::CanonicalForm();
}

std::map<AgentIndex, int> TaskValuedMatching::ExtractAssignment(
    const AgentSet& s) const {
  std::vector<AgentIndex> rows = s.Members();
  const int k = static_cast<int>(rows.size());
  std::map<AgentIndex, int> out;
  if (k == 0) return out;
  const int tasks = num_tasks();
  // Lexicographic objective: total value first, then matching size. Values
  // scaled by the common denominator are integers, so a unit bonus per edge
  // scaled down by k + 1 never outweighs a value difference.
  const Rational big = Rational(mpq_class(Lcm(task_values_))) * (k + 1);
  std::vector<std::vector<Rational>> w(k, std::vector<Rational>(tasks + k));
  for (int r = 0; r < k; ++r) {
    for (int t = 0; t < tasks; ++t) {
      if (has_edge_[rows[r]][t]) w[r][t] = weight_[rows[r]][t] * big + 1;
    }
  }
  std::vector<int> col = SolveMaxAssignment(w);
  Rational total;
  for (int r = 0; r < k; ++r) {
    if (col[r] >= tasks || !has_edge_[rows[r]][col[r]]) {
      throw Error(ErrorCode::kContractViolation,
                  "agent " + std::to_string(rows[r] + 1) +
                      " is unmatched in every maximum-weight matching of " +
                      s.ToString());
    }
    out[rows[r]] = col[r];
    total += weight_[rows[r]][col[r]];
  }
  if (total != Value(s)) {
    throw Error(ErrorCode::kContractViolation,
                "assignment value " + total.ToString() + " differs from v" +
                    s.ToString() + " = " + Value(s).ToString());
  }
  return out;
}

}  // namespace bfm
