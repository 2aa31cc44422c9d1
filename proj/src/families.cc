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

#include "maxcurve/families.h"

#include <string>

#include "maxcurve/error.h"

namespace maxcurve {
namespace {

uint32_t CharacteristicOf(uint64_t q) {
  const auto pm = PrimePowerDecompose(q);
  if (!pm) {
    throw Error(ErrorKind::kInvalidParams,
                std::to_string(q) + " is not a prime power");
  }
  return pm->first;
}

}  // namespace

HurwitzParams HurwitzParams::Make(uint32_t n, uint64_t q) {
  if (n < 2) throw Error(ErrorKind::kInvalidParams, "n must be at least 2");
  const auto pm = PrimePowerDecompose(q);
  if (!pm) {
    throw Error(ErrorKind::kInvalidParams,
                std::to_string(q) + " is not a prime power");
  }
  HurwitzParams params;
  params.n = n;
  params.d = n * n - n + 1;
  params.q = q;
  params.p = pm->first;
  params.m = pm->second;
  if ((q + 1) % params.d != 0) {
    throw Error(ErrorKind::kDivisibilityViolated,
                "d = " + std::to_string(params.d) + " does not divide q + 1 = " +
                    std::to_string(q + 1));
  }
  if (params.d % params.p == 0) {
    throw Error(ErrorKind::kBadCharacteristic,
                "characteristic " + std::to_string(params.p) + " divides d");
  }
  return params;
}

PlaneCurve Hermitian(uint64_t q) {
  CharacteristicOf(q);
  const auto e = static_cast<uint32_t>(q + 1);
  return PlaneCurve::Smooth(
      HomogeneousPoly({{1, e, 0, 0}, {1, 0, e, 0}, {1, 0, 0, e}}),
      "hermitian(q=" + std::to_string(q) + ")");
}

PlaneCurve Hurwitz(const HurwitzParams& params) {
  const uint32_t n = params.n;
  return PlaneCurve::Smooth(
      HomogeneousPoly({{1, n, 1, 0}, {1, 0, n, 1}, {1, 1, 0, n}}),
      "hurwitz(n=" + std::to_string(n) + ")");
}

PlaneCurve Fermat(uint32_t d, uint64_t q) {
  if (d == 0) throw Error(ErrorKind::kInvalidParams, "d must be positive");
  const uint32_t p = CharacteristicOf(q);
  if (d % p == 0) {
    throw Error(ErrorKind::kBadCharacteristic,
                "characteristic " + std::to_string(p) + " divides d = " +
                    std::to_string(d));
  }
  return PlaneCurve::Smooth(
      HomogeneousPoly({{1, d, 0, 0}, {1, 0, d, 0}, {1, 0, 0, d}}),
      "fermat(d=" + std::to_string(d) + ")");
}

PlaneCurve WeierstrassModel(uint64_t q) {
  const uint32_t p = CharacteristicOf(q);
  if (p == 2 || p == 3) {
    throw Error(ErrorKind::kBadCharacteristic,
                "the cubic model needs characteristic other than 2 and 3");
  }
  // Y^2 Z - Z^3 + 4 X^3
  return PlaneCurve::Smooth(
      HomogeneousPoly({{1, 0, 2, 1}, {-1, 0, 0, 3}, {4, 3, 0, 0}}),
      "weierstrass");
}

PlaneCurve LineL() {
  return PlaneCurve::Smooth(
      HomogeneousPoly({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}), "line");
}

}  // namespace maxcurve
