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

#ifndef BFM_TOOLS_CLI_SPEC_JSON_H_
#define BFM_TOOLS_CLI_SPEC_JSON_H_

#include "bfm/mechanisms.h"
#include "cli/generator.h"
#include "cli/instance_file.h"

namespace bfm::cli {

// A bare string is read as a kind name with default parameters.
MechanismSpec ParseMechanismSpec(const Json& doc, const std::string& field);
Json MechanismSpecToJson(const MechanismSpec& spec);

GeneratorSpec ParseGeneratorSpec(const Json& doc, const std::string& field);
Json GeneratorSpecToJson(const GeneratorSpec& spec);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_CLI_SPEC_JSON_H_
