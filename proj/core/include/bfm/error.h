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

#ifndef BFM_ERROR_H_
#define BFM_ERROR_H_

#include <stdexcept>
#include <string>

namespace bfm {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyInstance,
  kDegenerateInstance,
  kSizeLimit,
  kContractViolation,
  kParse,
  kMonotonicityViolation,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// distinguishes the failure classes callers are expected to handle.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kEmptyInstance:
      return "empty-instance";
    case ErrorCode::kDegenerateInstance:
      return "degenerate-instance";
    case ErrorCode::kSizeLimit:
      return "size-limit";
    case ErrorCode::kContractViolation:
      return "contract-violation";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kMonotonicityViolation:
      return "monotonicity-violation";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

}  // namespace bfm

#endif  // BFM_ERROR_H_
