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

#ifndef MZI_CLI_STATE_FILE_H_
#define MZI_CLI_STATE_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mzi/fock.h"

namespace mzi::cli {

// State file layout:
//
//   {"cutoff": N,
//    "amplitudes": [{"ja": j, "jb": k, "re": x, "im": y}, ...]}
//
// Unlisted amplitudes are zero. Entries must be unique and inside the cutoff.
// A Euclidean norm within 1e-10 of 1 is taken verbatim; within 1e-6 it is
// renormalized and a warning is appended to `warnings`; anything else is
// rejected.

FockState parse_state(std::string_view text, std::vector<std::string>* warnings = nullptr);
FockState read_state_file(const std::filesystem::path& path,
                          std::vector<std::string>* warnings = nullptr);

// Nonzero amplitudes in (ja, jb) order at 17 significant digits, so reading
// the output back reproduces every amplitude exactly.
std::string format_state(const FockState& state);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace mzi::cli

#endif  // MZI_CLI_STATE_FILE_H_
