// Copyright 2026 The mzi-qfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MZI_ERROR_H_
#define MZI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzi {

// Machine-readable failure categories. The CLI prints the code next to the
// message so scripts can dispatch on it.
enum class ErrorCode {
  kCutoffExceeded,
  kTruncationOverflow,
  kTruncationLoss,
  kInvalidArgument,
  kUnattainable,
  kNotSingleSector,
  kMalformedInput,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mzi

#endif  // MZI_ERROR_H_
