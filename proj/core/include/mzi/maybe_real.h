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

#ifndef MZI_MAYBE_REAL_H_
#define MZI_MAYBE_REAL_H_

#include <optional>
#include <string>
#include <utility>

namespace mzi {

// A real-valued report field that may be UNDEFINED. Undefined values carry a
// reason and never compare equal to, or coerce into, a number.
class MaybeReal {
 public:
  MaybeReal() : reason_("not computed") {}
  MaybeReal(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static MaybeReal undefined(std::string reason) {
    MaybeReal m;
    m.reason_ = std::move(reason);
    return m;
  }

  bool defined() const { return value_.has_value(); }
  explicit operator bool() const { return defined(); }

  // Throws std::bad_optional_access when undefined.
  double value() const { return value_.value(); }
  double operator*() const { return value(); }

  // Empty when defined.
  const std::string& reason() const { return reason_; }

 private:
  std::optional<double> value_;
  std::string reason_;
};

}  // namespace mzi

#endif  // MZI_MAYBE_REAL_H_
