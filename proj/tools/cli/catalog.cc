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

#include "cli/catalog.h"

#include <stdexcept>

namespace mzi::cli {

namespace {

double one(double) { return 1.0; }
double zero(double) { return 0.0; }

const ClosedForm kCatalog[] = {
    {Family::kTwinSqueezedVacuum, "S_a(xi) S_b(xi) |0,0>", "3 + 1/n", "1", "n^2 + 2n",
     [](double n) { return 3.0 + 1.0 / n; }, one, [](double n) { return n * n + 2.0 * n; }},
    {Family::kTwinFock, "B |n,n>", "3/2 - 1/n", "1/2 - 1/n", "(n^2 + 2n)/2",
     [](double n) { return 1.5 - 1.0 / n; }, [](double n) { return 0.5 - 1.0 / n; },
     [](double n) { return (n * n + 2.0 * n) / 2.0; }},
    {Family::kEntangledCoherent, "(|alpha,0> + |0,alpha>)/sqrt(2)", "2", "0", "n^2 + n",
     [](double) { return 2.0; }, zero, [](double n) { return n * n + n; }},
    {Family::kNoon, "(|n,0> + |0,n>)/sqrt(2)", "2 - 2/n", "0", "n^2",
     [](double n) { return 2.0 - 2.0 / n; }, zero, [](double n) { return n * n; }},
    {Family::kAmplifiedBell, "S_a(xi) S_b(xi) B |1,0>", "(9n^2 + 2n - 11)/(4n^2)",
     "(3n^2 - n - 1)/(4n^2)", "(3n^2 + 6n - 5)/4",
     [](double n) { return (9.0 * n * n + 2.0 * n - 11.0) / (4.0 * n * n); },
     [](double n) { return (3.0 * n * n - n - 1.0) / (4.0 * n * n); },
     [](double n) { return (3.0 * n * n + 6.0 * n - 5.0) / 4.0; }},
    {Family::kFraternalTwinFock, "B |n+1,n>", "(3n^2 - 2n - 1)/(2n^2)", "(n - 1)^2/(2n^2)",
     "(n(n + 2) - 1)/2",
     [](double n) { return (3.0 * n * n - 2.0 * n - 1.0) / (2.0 * n * n); },
     [](double n) { return (n - 1.0) * (n - 1.0) / (2.0 * n * n); },
     [](double n) { return (n * (n + 2.0) - 1.0) / 2.0; }},
    {Family::kCoherent, "|alpha/sqrt(2), i alpha/sqrt(2)>", "1", "1", "n", one, one,
     [](double n) { return n; }},
    {Family::kTwoModeSqueezedVacuum, "exp(chi (a^dag b^dag - a b)) |0,0>", "4", "4 + 2/n", "0",
     [](double) { return 4.0; }, [](double n) { return 4.0 + 2.0 / n; }, zero},
    {Family::kSeparableCoherentProbe, "B |n,0>", "1 - 1/n", "1 - 1/n", "n",
     [](double n) { return 1.0 - 1.0 / n; }, [](double n) { return 1.0 - 1.0 / n; },
     [](double n) { return n; }},
    {Family::kFockPair, "|n,n>", "1 - 2/n", "1", "0",
     [](double n) { return 1.0 - 2.0 / n; }, one, zero},
};

}  // namespace

const ClosedForm& closed_form(Family family) {
  for (const ClosedForm& row : kCatalog) {
    if (row.family == family) return row;
  }
  throw std::logic_error("family missing from closed-form catalog");
}

}  // namespace mzi::cli
