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

#ifndef BFM_TOOLS_CLI_INSTANCE_FILE_H_
#define BFM_TOOLS_CLI_INSTANCE_FILE_H_

#include <string>

#include <nlohmann/json.hpp>

#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceFileVersion = 1;

// Reads a rational from a "p/q" string (or an integer). Errors name `field`.
Rational ParseRationalField(const Json& value, const std::string& field);

// Throws Error(kParse) naming the offending field.
Instance ParseInstance(const Json& doc);
Instance ParseInstanceText(const std::string& text);
Instance LoadInstance(const std::string& path);

Json InstanceToJson(const Instance& instance);
void SaveInstance(const Instance& instance, const std::string& path);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_CLI_INSTANCE_FILE_H_
