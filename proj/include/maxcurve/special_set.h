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

#ifndef MAXCURVE_SPECIAL_SET_H_
#define MAXCURVE_SPECIAL_SET_H_

#include <cstdint>
#include <string>
#include <vector>

#include "maxcurve/families.h"
#include "maxcurve/ffield.h"
#include "maxcurve/plane.h"

namespace maxcurve {

// The split set S on H_n: affine points (u:v:1), uv != 0, whose projections
// u^{n-1} v and u^{-1} v^n have ((q+1)/d)-th powers in F_q, together with the
// three fundamental points.
struct SplitSet {
  HurwitzParams params;
  // Canonical scan order.
  std::vector<ProjectivePoint> points;
  // #S - 3.
  uint64_t affine_count = 0;
  // Size of the image of the affine part in the line X + Y + Z = 0.
  uint64_t t = 0;

  // Wraps an arbitrary point list (negative controls, subgroup tests); t is
  // the number of distinct projections of its affine points.
  static SplitSet FromPoints(const HurwitzParams& params,
                             std::vector<ProjectivePoint> points);
};

// (1:0:0), (0:1:0), (0:0:1).
std::vector<ProjectivePoint> FundamentalPoints(const FieldCtx& ctx);

// Throws InvalidParams unless ctx is F_{q^2} for params.q.
void RequireMatchingField(const HurwitzParams& params, const FieldCtx& ctx);

// Residue condition x^{(q+1)/d} in F_q.
bool ResidueCondition(const Element& x, const HurwitzParams& params);

SplitSet BuildS(const HurwitzParams& params, const FieldCtx& ctx);

// (u:v:1) -> (u^{n-1} v : u^{-1} v^n : 1); the fundamental points go to
// (-1:0:1), (-1:1:0), (0:-1:1). Throws UndefinedAtPoint elsewhere.
ProjectivePoint PiProject(const ProjectivePoint& pt, uint32_t n);

// Rational points of H_n over `image`, which must lie on X + Y + Z = 0.
std::vector<ProjectivePoint> PiFiber(const ProjectivePoint& image,
                                     const HurwitzParams& params,
                                     const FieldCtx& ctx);

// #{x in F_{q^2} \ {0, -1} : x and -1 - x both satisfy the residue condition}.
uint64_t CountT(const HurwitzParams& params, const FieldCtx& ctx);

struct SplitCountReport {
  uint64_t s_count = 0;
  // (q+1)^2/d + q(d-3)
  uint64_t s_expected = 0;
  uint64_t t = 0;
  // q + (q+1)^2/d^2 - 3(q+1)/d
  uint64_t t_expected = 0;
  // (q+1)^2/d^2 - 1; agrees with t_expected exactly when d = 3.
  uint64_t t_closed_form = 0;
  bool s_holds = false;
  bool t_holds = false;
  bool closed_form_applies = false;
  bool closed_form_holds = false;
  bool affine_is_d_times_t = false;

  bool ok() const {
    return s_holds && t_holds && affine_is_d_times_t &&
           (!closed_form_applies || closed_form_holds);
  }
};

SplitCountReport VerifySplitCounts(const HurwitzParams& params, const FieldCtx& ctx);

// A solution x = a + b*alpha, y = c - b*alpha of x + y + 1 = 0 with b != 0,
// coordinates in [0, p).
struct CoordTriple {
  int64_t a = 0, c = 0, b = 0;
  friend auto operator<=>(const CoordTriple&, const CoordTriple&) = default;
};

struct CaseAnalysisReport {
  bool applicable = false;
  std::string note;
  std::vector<CoordTriple> found;
  std::vector<CoordTriple> expected;
  bool matches = false;
};

// Hand case analysis for n = 2 at q = 5 and q = 11 in the basis
// alpha^2 = -alpha - 1: the b != 0 solutions of the t-count. Not applicable
// for other parameters or another modulus.
CaseAnalysisReport VerifyCaseAnalysis(const HurwitzParams& params,
                                      const FieldCtx& ctx);

// The eight candidates b = 8(a^2 - ac + c^2)/(a - c) at q = 11, as signed
// integers, and the two of them that are not solutions.
const std::vector<CoordTriple>& Q11CandidateTriples();
const std::vector<CoordTriple>& Q11ExcludedTriples();

}  // namespace maxcurve

#endif  // MAXCURVE_SPECIAL_SET_H_
