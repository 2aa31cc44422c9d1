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

#ifndef MAXCURVE_COVERINGS_H_
#define MAXCURVE_COVERINGS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "maxcurve/ffield.h"
#include "maxcurve/plane.h"
#include "maxcurve/special_set.h"

namespace maxcurve {

// psi: F_d -> H_n, (X:Y:Z) -> (X^n Z : X Y^n : Y Z^n).
ProjectivePoint Psi(const ProjectivePoint& pt, uint32_t n);

// Rational points of F_d over `target`, computed from the parametrization
// X = A y, Y = y, Z = 1 with A^d = u^n / v^{n-1} and y^d = u^{-1} v^n, then
// keeping the candidates that psi sends to the target. Over the fundamental
// points the fiber is the section of F_d by Y = 0, Z = 0 or X = 0.
std::vector<ProjectivePoint> PsiFiber(const ProjectivePoint& target,
                                      const HurwitzParams& params,
                                      const FieldCtx& ctx);

// Independent route: enumerate F_d(F_{q^2}) and bucket by psi-image.
std::map<ProjectivePoint, std::vector<ProjectivePoint>> EnumerateFibers(
    const HurwitzParams& params, const FieldCtx& ctx, unsigned threads = 1);

// Deck transformation (X:Y:Z) -> (eta X : eta^n Y : Z) for a primitive d-th
// root of unity eta. Throws NotPrimitiveRoot.
ProjectivePoint Tau(const ProjectivePoint& pt, const Element& eta,
                    const HurwitzParams& params);
// Smallest-code primitive d-th root of unity.
Element PrimitiveRootOfUnity(const FieldCtx& ctx, uint32_t d);
bool IsPrimitiveRootOfUnity(const Element& eta, uint32_t d);

struct CoveringReport {
  uint32_t degree = 0;
  bool unramified = false;
  // S-points whose whole fiber is rational with `degree` elements.
  uint64_t split_points = 0;
  uint64_t s_count = 0;
  // fiber size -> number of S-points with that fiber size.
  std::map<uint64_t, uint64_t> fiber_histogram;
  // Set when the enumeration route was run.
  std::optional<bool> cross_check_agrees;

  // Theorem-instance fields, filled by VerifyTheoremInstance.
  uint64_t fermat_count = 0;
  uint64_t hurwitz_count = 0;
  // fiber size -> number of H_n-points with that many rational preimages,
  // over every point of H_n(F_{q^2}) with at least one preimage.
  std::map<uint64_t, uint64_t> full_fiber_histogram;
  bool hypothesis_i = false;    // d | (q+1)^2
  bool hypothesis_ii = false;   // #S = (q+1)^2/d + q(2g-2)
  bool count_identity = false;  // d #S = #F_d(F_{q^2})
  bool rh_identity = false;     // 2g' - 2 = d(2g - 2)
  bool fermat_maximal = false;
  bool hurwitz_maximal = false;

  bool SplittingOk() const {
    return unramified && split_points == s_count &&
           cross_check_agrees.value_or(true);
  }
  bool TheoremOk() const {
    return SplittingOk() && hypothesis_i && hypothesis_ii && count_identity &&
           rh_identity && fermat_maximal && hurwitz_maximal;
  }
};

CoveringReport VerifySplitting(const SplitSet& s, const FieldCtx& ctx,
                               bool cross_check = false, unsigned threads = 1);
CoveringReport VerifyTheoremInstance(const SplitSet& s, const FieldCtx& ctx,
                                     bool cross_check = false,
                                     unsigned threads = 1);

struct CorollaryReport {
  int64_t g = 0;
  int64_t d_s = 0;
  Rational bound;
  // g > bound.
  bool hypothesis_holds = false;
  // d_S (g - 1) + 1.
  int64_t g_prime = 0;
  int64_t lemma_threshold = 0;
  bool g_prime_exceeds_lemma = false;
  int64_t fermat_genus = 0;
  bool g_prime_matches_fermat = false;
};

// Genus hypothesis of the covering corollary with d_S = d. Holding or not is
// reported, not asserted; only the genus bookkeeping must be consistent.
CorollaryReport VerifyCorollaryInstance(const SplitSet& s);

}  // namespace maxcurve

#endif  // MAXCURVE_COVERINGS_H_
