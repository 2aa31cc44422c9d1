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

#ifndef MAXCURVE_ELLGROUP_H_
#define MAXCURVE_ELLGROUP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "maxcurve/ffield.h"
#include "maxcurve/plane.h"

namespace maxcurve {

// A rational point of the cubic Y^2 Z = Z^3 - 4 X^3. Only EllipticGroup
// creates these, so every instance lies on the curve.
class EllPoint {
 public:
  const ProjectivePoint& point() const { return pt_; }
  bool IsNeutral() const { return pt_.z().IsZero(); }
  const Element& x() const { return pt_.x(); }
  const Element& y() const { return pt_.y(); }

  friend bool operator==(const EllPoint&, const EllPoint&) = default;
  friend auto operator<=>(const EllPoint& a, const EllPoint& b) {
    return a.pt_ <=> b.pt_;
  }

 private:
  friend class EllipticGroup;
  explicit EllPoint(ProjectivePoint pt) : pt_(std::move(pt)) {}

  ProjectivePoint pt_;
};

struct Subgroup {
  // Canonical point order.
  std::vector<EllPoint> elements;
  uint64_t order = 0;
  std::vector<EllPoint> generators;
};

struct TorsionReport {
  uint64_t order = 0;
  uint64_t expected_order = 0;
  // Points P with (q+1) P != O.
  uint64_t not_killed = 0;
  bool ok() const { return order == expected_order && not_killed == 0; }
};

// The group of rational points of Y^2 Z = Z^3 - 4 X^3 with neutral element
// (0:1:0), using the affine chord-tangent formulas
//   x3 = -lambda^2/4 - x1 - x2,  -y3 = lambda (x3 - x1) + y1.
class EllipticGroup {
 public:
  // Throws BadCharacteristic in characteristic 2 or 3.
  explicit EllipticGroup(FieldPtr ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  const PlaneCurve& curve() const { return curve_; }

  EllPoint Neutral() const;
  bool Contains(const ProjectivePoint& pt) const { return curve_.Contains(pt); }
  // Throws PointNotOnCurve.
  EllPoint Point(const ProjectivePoint& pt) const;
  EllPoint Affine(const Element& x, const Element& y) const;

  // (U:V:W) -> (UW : 2VW + U^2 : U^2), from U^2 V + V^2 W + W^2 U = 0. The
  // formula vanishes at (0:1:0) and (0:0:1); there the morphism takes its
  // limiting values (0:-1:1) and (0:1:0). Throws PointNotOnCurve off H_2.
  EllPoint Phi(const ProjectivePoint& h2_point) const;

  EllPoint Add(const EllPoint& p, const EllPoint& q) const;
  EllPoint Negate(const EllPoint& p) const;
  EllPoint Multiply(uint64_t k, const EllPoint& p) const;

  // X(F_{q^2}) in canonical order.
  const std::vector<EllPoint>& Points() const { return points_; }

  // Smallest subgroup containing gens, by worklist fixpoint under adding
  // generators. Stops with NotDivisible if it outgrows (q+1)^2.
  Subgroup Closure(const std::vector<EllPoint>& gens) const;
  // #X(F_{q^2}) / #<gens>; NotDivisible if the quotient is not exact.
  uint64_t IndexDS(const std::vector<EllPoint>& gens) const;
  TorsionReport CheckTorsion() const;

  // (y - 1)^{(q+1)/3} in F_q for affine P; the set phi(S) is exactly O plus
  // the affine points satisfying this. Requires 3 | q + 1.
  bool InResidueLocus(const EllPoint& p) const;

 private:
  FieldPtr ctx_;
  PlaneCurve curve_;
  std::vector<EllPoint> points_;
};

// 4(y3-1)(x2-x1)^3 = (y2-y1)(y1+y2-y1y2+3) + 12x1x2^2(y1+1) - 12x1^2x2(y2+1)
// for affine P, Q with x1 != x2. These return nullopt when a precondition
// fails.
std::optional<bool> ChordIdentityHolds(const EllipticGroup& g, const EllPoint& p,
                        const EllPoint& q);
// 8 y1^3 (y3-1) = (y1+1)(y1-3)^3 for affine P with y1 != 0, 2P = (x3:y3:1).
// Since (2 y1^3)^{(q+1)/3} = 2 y1^{q+1} lies in F_q, doubling preserves the
// residue locus.
std::optional<bool> DoublingIdentityHolds(const EllipticGroup& g, const EllPoint& p);
// 4(y3-1)(x2-x1)^3 = 8(v2-v1)^3 / (a1^2 a2^2) with u = 1/x, v = (y-1)/(2x^2),
// a = uv, for affine P, Q with x1 != x2, x_i != 0 and y_i != 1.
std::optional<bool> SubstitutionIdentityHolds(const EllipticGroup& g, const EllPoint& p,
                               const EllPoint& q);

}  // namespace maxcurve

#endif  // MAXCURVE_ELLGROUP_H_
