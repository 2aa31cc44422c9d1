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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "maxcurve/cli.h"

int main(int argc, char** argv) {
  CLI::App app{"Verifies explicit constructions on maximal curves over F_{q^2}"};
  app.require_subcommand(1);

  maxcurve::RunConfig config;
  std::string output;
  uint32_t n = 0, d = 0, p = 0, m = 0;
  uint64_t q = 0;
  std::string modulus;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", q, "q, a prime power; the field is F_{q^2}")->required();
    sub->add_option("--p", p, "characteristic (must match q)");
    sub->add_option("--m", m, "q = p^m (must match q)");
    sub->add_option("--modulus", modulus,
                    "defining polynomial of F_{q^2} over F_p, e.g. \"x^2+x+1\"");
    sub->add_option("--format", config.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", output, "write the report to a file");
    sub->add_option("--threads", config.threads, "enumeration threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--cross-check", config.cross_check,
                  "cross-check covering fibers by full enumeration");
    sub->add_flag("--timings", config.timings, "include wall-clock timings");
  };

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"count", "count rational points of a curve"},
      {"maximal", "compare a point count with the Weil upper bound"},
      {"build-s", "build the split set S on H_n and check its counts"},
      {"subgroup", "closure of phi(S) on the elliptic model, index, torsion"},
      {"covering", "Fermat to Hurwitz covering: splitting and counting"},
      {"verify-all", "run every check for (n, q)"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->add_option("--n", n, "Hurwitz parameter n >= 2");
    if (std::string(s.name) == "count" || std::string(s.name) == "maximal") {
      sub->add_option("--curve", config.curve,
                      "hermitian | hurwitz | fermat | weierstrass | line")
          ->required();
      sub->add_option("--d", d, "Fermat degree");
    }
  }

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  auto given = [&](const char* opt) {
    return sub->get_option_no_throw(opt) != nullptr && sub->count(opt) > 0;
  };
  config.q = q;
  if (given("--n")) config.n = n;
  if (given("--d")) config.d = d;
  if (given("--p")) config.p = p;
  if (given("--m")) config.m = m;
  if (given("--modulus")) config.modulus = modulus;

  const maxcurve::RunResult result = maxcurve::Run(config);
  if (output.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot open " << output << "\n";
      return maxcurve::kExitInvalidParams;
    }
    out << result.report;
  }
  return result.exit_code;
}
