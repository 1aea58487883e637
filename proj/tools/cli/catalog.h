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

#ifndef MZI_CLI_CATALOG_H_
#define MZI_CLI_CATALOG_H_

#include <string_view>

#include "mzi/states.h"

namespace mzi::cli {

// Published closed forms for one probe family, each a function of the total
// mean photon number. Kept in one place so the audit has a single reference.
struct ClosedForm {
  Family family;
  std::string_view probe;  // probe state, plain text
  std::string_view g2_text;
  std::string_view g2_ab_text;
  std::string_view qfi_text;
  double (*g2)(double nbar);
  double (*g2_ab)(double nbar);
  double (*qfi)(double nbar);
};

const ClosedForm& closed_form(Family family);

}  // namespace mzi::cli

#endif  // MZI_CLI_CATALOG_H_
