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

#ifndef BFM_TOOLS_CLI_REPORT_H_
#define BFM_TOOLS_CLI_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include "bfm/mechanisms.h"
#include "bfm/verify.h"
#include "cli/experiment.h"
#include "cli/instance_file.h"

namespace bfm::cli {

// Six places, half away from zero: 23/5 -> "4.600000".
std::string DecimalColumn(const Rational& value);
std::string CsvField(const std::string& text);

Json BranchToJson(const OutcomeBranch& branch);
Json RatioToJson(const RatioResult& ratio);
Json CheckToJson(const CheckResult& check);
Json RowToJson(const ReportRow& row);
Json RowsToJson(const std::vector<ReportRow>& rows);
Json VerificationToJson(const VerificationReport& report);
Json PaymentsToJson(const Instance& instance, const MechanismSpec& spec,
                    const RandomizedOutcome& outcome);

std::string CsvHeader();
std::string RowToCsv(const ReportRow& row);
// Header plus one line per row.
std::string RowsToCsv(const std::vector<ReportRow>& rows);

// "csv" or "json"; JSON output is byte-deterministic for equal rows.
void WriteReport(const std::vector<ReportRow>& rows, const std::string& format,
                 std::ostream& out);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_CLI_REPORT_H_
