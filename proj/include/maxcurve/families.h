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

#ifndef MAXCURVE_FAMILIES_H_
#define MAXCURVE_FAMILIES_H_

#include <cstdint>

#include "maxcurve/plane.h"

namespace maxcurve {

// Parameters of a Hurwitz curve U^n V + V^n W + W^n U = 0 over F_{q^2} with
// d = n^2 - n + 1 dividing q + 1 and the characteristic prime to d.
struct HurwitzParams {
  uint32_t n = 0;
  uint32_t d = 0;
  uint64_t q = 0;
  uint32_t p = 0;
  uint32_t m = 0;

  // Throws InvalidParams (n < 2 or q not a prime power),
  // DivisibilityViolated (d does not divide q + 1) or BadCharacteristic.
  static HurwitzParams Make(uint32_t n, uint64_t q);

  // (q + 1) / d, the exponent of the residue conditions.
  uint64_t ResidueExponent() const { return (q + 1) / d; }
  int64_t Genus() const { return int64_t{n} * (n - 1) / 2; }
};

// X^{q+1} + Y^{q+1} + Z^{q+1}.
PlaneCurve Hermitian(uint64_t q);
PlaneCurve Hurwitz(const HurwitzParams& params);
// X^d + Y^d + Z^d; BadCharacteristic when char(F_q) divides d.
PlaneCurve Fermat(uint32_t d, uint64_t q);
// Y^2 Z = Z^3 - 4 X^3; BadCharacteristic in characteristic 2 or 3.
PlaneCurve WeierstrassModel(uint64_t q);
// X + Y + Z.
PlaneCurve LineL();

}  // namespace maxcurve

#endif  // MAXCURVE_FAMILIES_H_
