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

#include "cli/state_file.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "cli/serialize.h"
#include "mzi/error.h"

namespace mzi::cli {

namespace {

constexpr double kVerbatimNormTolerance = 1e-10;
constexpr double kAcceptNormTolerance = 1e-6;

int read_index(const Json& entry, const char* key) {
  const auto it = entry.find(key);
  if (it == entry.end() || !it->is_number_integer()) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("amplitude entry needs integer field '") + key + "'");
  }
  const auto value = it->get<long long>();
  if (value < 0) {
    throw Error(ErrorCode::kMalformedInput, std::string("negative index '") + key + "'");
  }
  return value > 1'000'000 ? 1'000'000 : static_cast<int>(value);
}

double read_real(const Json& entry, const char* key) {
  const auto it = entry.find(key);
  if (it == entry.end()) return 0.0;
  if (!it->is_number()) {
    throw Error(ErrorCode::kMalformedInput, std::string("field '") + key + "' must be a number");
  }
  return it->get<double>();
}

}  // namespace

FockState parse_state(std::string_view text, std::vector<std::string>* warnings) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedInput, "state file must be an object");
  const auto cutoff_it = doc.find("cutoff");
  if (cutoff_it == doc.end() || !cutoff_it->is_number_integer() ||
      cutoff_it->get<long long>() < 0 || cutoff_it->get<long long>() > 4096) {
    throw Error(ErrorCode::kMalformedInput, "'cutoff' must be an integer in [0, 4096]");
  }
  const int cutoff = cutoff_it->get<int>();
  const auto amps_it = doc.find("amplitudes");
  if (amps_it == doc.end() || !amps_it->is_array()) {
    throw Error(ErrorCode::kMalformedInput, "'amplitudes' must be an array");
  }

  FockVector v(cutoff);
  std::set<std::pair<int, int>> seen;
  for (const Json& entry : *amps_it) {
    if (!entry.is_object()) {
      throw Error(ErrorCode::kMalformedInput, "amplitude entries must be objects");
    }
    const int ja = read_index(entry, "ja");
    const int jb = read_index(entry, "jb");
    if (ja > cutoff || jb > cutoff) {
      throw Error(ErrorCode::kCutoffExceeded,
                  "index exceeds cutoff: (" + std::to_string(ja) + ", " + std::to_string(jb) +
                      ") with cutoff " + std::to_string(cutoff));
    }
    if (!seen.emplace(ja, jb).second) {
      throw Error(ErrorCode::kMalformedInput,
                  "duplicate amplitude (" + std::to_string(ja) + ", " + std::to_string(jb) + ")");
    }
    v(ja, jb) = Complex{read_real(entry, "re"), read_real(entry, "im")};
  }

  const double norm = std::sqrt(v.norm_squared());
  if (!(norm > 0.0)) throw Error(ErrorCode::kMalformedInput, "state has zero norm");
  const double deviation = std::abs(norm - 1.0);
  if (deviation <= kVerbatimNormTolerance) {
    return FockState::adopt(std::move(v), kVerbatimNormTolerance);
  }
  // A few ulps of slack so that a literal 0.999999 counts as within 1e-6.
  if (deviation <= kAcceptNormTolerance * (1.0 + 1e-9)) {
    if (warnings) {
      warnings->push_back("state norm " + format_number(norm) + " renormalized to 1");
    }
    return FockState::normalized(std::move(v));
  }
  throw Error(ErrorCode::kMalformedInput,
              "state norm " + format_number(norm) + " differs from 1 by more than 1e-6");
}

FockState read_state_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str(), warnings);
}

std::string format_state(const FockState& state) {
  Json amps = Json::array();
  for (int j = 0; j <= state.cutoff(); ++j) {
    for (int k = 0; k <= state.cutoff(); ++k) {
      const Complex c = state.amplitude(j, k);
      if (c == Complex{}) continue;
      Json entry = Json::object();
      entry["ja"] = j;
      entry["jb"] = k;
      entry["re"] = c.real();
      entry["im"] = c.imag();
      amps.push_back(std::move(entry));
    }
  }
  Json doc = Json::object();
  doc["cutoff"] = state.cutoff();
  doc["amplitudes"] = std::move(amps);
  return dump(doc);
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::kIo, "cannot move output into place: " + ec.message());
  }
}

}  // namespace mzi::cli
