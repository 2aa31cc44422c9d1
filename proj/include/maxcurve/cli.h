/* Copyright 2026 The maxcurve Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MAXCURVE_CLI_H_
#define MAXCURVE_CLI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxcurve {

struct RunConfig {
  // count | maximal | build-s | subgroup | covering | verify-all
  std::string command;
  // hermitian | hurwitz | fermat | weierstrass | line
  std::string curve;
  std::optional<uint32_t> n;
  std::optional<uint32_t> d;
  std::optional<uint64_t> q;
  std::optional<uint32_t> p;
  std::optional<uint32_t> m;
  std::optional<std::string> modulus;
  // json | csv | text
  std::string format = "json";
  unsigned threads = 1;
  bool cross_check = false;
  // Wall-clock timings make the report run-dependent, so they are opt-in.
  bool timings = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalidParams = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string report;
};

// Validates the whole configuration, then runs the requested pipeline.
// Never throws for bad input: parameter errors yield exit code 2.
RunResult Run(const RunConfig& config);

// Integer-coefficient polynomial in x ("x^2+x+1", "3x^4 - 2*x + 7"), reduced
// mod p; coefficients low to high. Throws InvalidParams.
std::vector<uint32_t> ParsePolynomial(std::string_view text, uint32_t p);

}  // namespace maxcurve

#endif  // MAXCURVE_CLI_H_
