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

#ifndef MZI_CLI_SERIALIZE_H_
#define MZI_CLI_SERIALIZE_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "mzi/coherence.h"
#include "mzi/entanglement.h"
#include "mzi/maybe_real.h"
#include "mzi/particle.h"
#include "mzi/qfi.h"
#include "mzi/states.h"

namespace mzi::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "mzi-qfi/1";

// Adds `key` as a number, or as null plus `key + "_reason"`.
void put(Json& object, const std::string& key, const MaybeReal& value);

Json to_json(const ProbeParams& params, Family family);
Json to_json(const CoherenceReport& report);
Json to_json(const QfiReport& report, const RouteTolerances& tolerances);
Json to_json(const ModeEntanglementReport& report);
Json to_json(const ParticleReport& report);
Json to_json(const SectorDecomposition& decomposition);

// Stable field order, two-space indent, doubles printed with 17 significant
// digits, trailing newline. Identical input gives identical bytes.
std::string dump(const Json& document);

// %.17g, or the empty string when undefined (CSV convention).
std::string format_number(double value);
std::string format_cell(const MaybeReal& value);

// Compact "key=value" rendering of the parameters a family uses.
std::string params_text(const ProbeParams& params, Family family);

}  // namespace mzi::cli

#endif  // MZI_CLI_SERIALIZE_H_
