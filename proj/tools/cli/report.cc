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

#include "cli/report.h"

#include <sstream>

#include "bfm/error.h"

namespace bfm::cli {
namespace {

std::string WinnersText(const AgentSet& winners) { return winners.ToString(); }

std::string BranchesText(const RandomizedOutcome& outcome) {
  std::string text;
  for (std::size_t k = 0; k < outcome.branches.size(); ++k) {
    const auto& b = outcome.branches[k];
    if (k > 0) text += " | ";
    text += b.label + "@" + b.probability.ToString() + ":" +
            WinnersText(b.outcome.winners) +
            " paid=" + b.outcome.TotalPayment().ToString();
  }
  return text;
}

std::string FailedChecks(const ReportRow& row) {
  std::string text;
  for (const auto& c : row.checks) {
    if (c.passed) continue;
    if (!text.empty()) text += ";";
    text += c.name;
  }
  return text;
}

}  // namespace

std::string DecimalColumn(const Rational& value) { return value.ToDecimal(6); }

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json BranchToJson(const OutcomeBranch& branch) {
  Json doc;
  doc["label"] = branch.label;
  doc["probability"] = branch.probability.ToString();
  Json winners = Json::array();
  Json payments = Json::object();
  branch.outcome.winners.ForEach([&](AgentIndex a) {
    winners.push_back(a + 1);
    payments[std::to_string(a + 1)] = branch.outcome.payments[a].ToString();
  });
  doc["winners"] = winners;
  doc["payments"] = payments;
  doc["total_payment"] = branch.outcome.TotalPayment().ToString();
  return doc;
}

Json RatioToJson(const RatioResult& ratio) {
  return {{"opt", ratio.opt.ToString()},
          {"expected_value", ratio.expected_value.ToString()},
          {"ratio", ratio.infinite ? "inf" : ratio.value.ToString()}};
}

Json CheckToJson(const CheckResult& check) {
  Json doc = {{"name", check.name}, {"passed", check.passed}};
  if (!check.passed) doc["witness"] = check.witness;
  return doc;
}

Json RowToJson(const ReportRow& row) {
  Json doc;
  doc["instance"] = row.instance;
  doc["digest"] = row.digest;
  doc["n"] = row.n;
  doc["budget"] = row.budget.ToString();
  doc["mechanism"] = row.mechanism;
  Json branches = Json::array();
  for (const auto& b : row.outcome.branches) branches.push_back(BranchToJson(b));
  doc["branches"] = branches;
  doc["max_total_payment"] = row.MaxTotalPayment().ToString();
  doc["empirical"] = RatioToJson(row.ratio);
  Json checks = Json::array();
  for (const auto& c : row.checks) checks.push_back(CheckToJson(c));
  doc["checks"] = checks;
  doc["passed"] = row.Passed();
  if (row.sampled) {
    doc["sample"] = {
        {"draw", row.sampled->draw.ToString()},
        {"branch", row.sampled->branch},
        {"label", row.outcome.branches[row.sampled->branch].label}};
  }
  return doc;
}

Json RowsToJson(const std::vector<ReportRow>& rows) {
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& row : rows) {
    list.push_back(RowToJson(row));
    if (!row.Passed()) ++failed;
  }
  return {{"rows", list}, {"failed_rows", failed}};
}

Json VerificationToJson(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(CheckToJson(c));
  return {{"digest", report.digest},
          {"mechanism", report.mechanism},
          {"checks", checks},
          {"empirical", RatioToJson(report.ratio)},
          {"passed", report.AllPassed()}};
}

Json PaymentsToJson(const Instance& instance, const MechanismSpec& spec,
                    const RandomizedOutcome& outcome) {
  Json branches = Json::array();
  for (const auto& b : outcome.branches) branches.push_back(BranchToJson(b));
  return {{"digest", InstanceDigest(instance)},
          {"mechanism", spec.ToString()},
          {"budget", instance.budget().ToString()},
          {"branches", branches}};
}

std::string CsvHeader() {
  return "instance,digest,n,budget,mechanism,branches,max_total_payment,"
         "max_total_payment_dec,expected_value,expected_value_dec,opt,opt_dec,"
         "ratio,ratio_dec,passed,failed_checks,sampled_branch";
}

std::string RowToCsv(const ReportRow& row) {
  const RatioResult& r = row.ratio;
  const Rational pay = row.MaxTotalPayment();
  std::ostringstream line;
  line << CsvField(row.instance) << ',' << row.digest << ',' << row.n << ','
       << row.budget.ToString() << ',' << CsvField(row.mechanism) << ','
       << CsvField(BranchesText(row.outcome)) << ',' << pay.ToString() << ','
       << DecimalColumn(pay) << ',' << r.expected_value.ToString() << ','
       << DecimalColumn(r.expected_value) << ',' << r.opt.ToString() << ','
       << DecimalColumn(r.opt) << ','
       << (r.infinite ? "inf" : r.value.ToString()) << ','
       << (r.infinite ? "inf" : DecimalColumn(r.value)) << ','
       << (row.Passed() ? "true" : "false") << ','
       << CsvField(FailedChecks(row)) << ',';
  if (row.sampled) {
    line << CsvField(row.outcome.branches[row.sampled->branch].label);
  }
  return line.str();
}

std::string RowsToCsv(const std::vector<ReportRow>& rows) {
  std::string out = CsvHeader() + "\n";
  for (const auto& row : rows) out += RowToCsv(row) + "\n";
  return out;
}

void WriteReport(const std::vector<ReportRow>& rows, const std::string& format,
                 std::ostream& out) {
  if (format == "csv") {
    out << RowsToCsv(rows);
  } else if (format == "json") {
    out << RowsToJson(rows).dump(2) << "\n";
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown format '" + format + "'");
  }
}

}  // namespace bfm::cli
