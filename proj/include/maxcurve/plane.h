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

#ifndef MAXCURVE_PLANE_H_
#define MAXCURVE_PLANE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxcurve/ffield.h"

namespace maxcurve {

// A point of P^2 in canonical form: the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  // Normalizes; throws InvalidParams when all coordinates vanish.
  ProjectivePoint(Element x, Element y, Element z);
  static ProjectivePoint Affine(Element x, Element y);

  const Element& x() const { return x_; }
  const Element& y() const { return y_; }
  const Element& z() const { return z_; }
  const FieldCtx& ctx() const { return x_.ctx(); }

  bool IsAffine() const { return z_.IsOne(); }
  // 0 for the chart z = 1, 1 for y = 1, z = 0, 2 for (1:0:0).
  int Chart() const;
  // Dense key consistent with the canonical scan order.
  uint64_t Key() const;
  std::string ToString() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  // Canonical scan order: affine chart row-major in (x, y), then the points
  // (x:1:0) by x, then (1:0:0).
  friend std::strong_ordering operator<=>(const ProjectivePoint& a,
                                          const ProjectivePoint& b) {
    return a.Key() <=> b.Key();
  }

 private:
  Element x_, y_, z_;
};

struct Monomial {
  int64_t coeff;
  uint32_t ex, ey, ez;
};

enum class Var { kX, kY, kZ };

// Homogeneous polynomial in X, Y, Z with integer coefficients, read mod p in
// whatever field it is evaluated over.
class HomogeneousPoly {
 public:
  // Throws InvalidParams if the terms do not share one total degree.
  explicit HomogeneousPoly(std::vector<Monomial> terms);

  uint32_t degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  Element Evaluate(const Element& x, const Element& y, const Element& z) const;
  Element Evaluate(const ProjectivePoint& pt) const {
    return Evaluate(pt.x(), pt.y(), pt.z());
  }
  // Formal partial derivative; the result may be the zero polynomial.
  HomogeneousPoly Derivative(Var v) const;
  bool IsZero() const { return terms_.empty(); }
  std::string ToString() const;

 private:
  HomogeneousPoly(std::vector<Monomial> terms, uint32_t degree);

  std::vector<Monomial> terms_;
  uint32_t degree_ = 0;
};

class PlaneCurve {
 public:
  // A curve whose nonsingularity is guaranteed by its construction; genus is
  // the plane-curve value (deg - 1)(deg - 2) / 2.
  static PlaneCurve Smooth(HomogeneousPoly poly, std::string label);
  // No smoothness claim, genus unknown.
  static PlaneCurve Generic(HomogeneousPoly poly, std::string label);

  const HomogeneousPoly& poly() const { return poly_; }
  uint32_t degree() const { return poly_.degree(); }
  std::optional<int64_t> genus() const { return genus_; }
  bool smooth() const { return smooth_; }
  const std::string& label() const { return label_; }

  bool Contains(const ProjectivePoint& pt) const {
    return poly_.Evaluate(pt).IsZero();
  }

 private:
  PlaneCurve(HomogeneousPoly poly, std::optional<int64_t> genus, bool smooth,
             std::string label)
      : poly_(std::move(poly)),
        genus_(genus),
        smooth_(smooth),
        label_(std::move(label)) {}

  HomogeneousPoly poly_;
  std::optional<int64_t> genus_;
  bool smooth_;
  std::string label_;
};

struct CountReport {
  std::string label;
  uint64_t q = 0;
  int64_t genus = 0;
  uint64_t count = 0;
  int64_t weil_upper = 0;
  bool maximal = false;
};

// The rational points of `curve` over `ctx`, each once, in canonical scan
// order. With threads > 1 the affine chart is split by x into disjoint ranges.
std::vector<ProjectivePoint> EnumeratePoints(const PlaneCurve& curve,
                                             const FieldCtx& ctx,
                                             unsigned threads = 1);

int64_t WeilUpperBound(int64_t q, int64_t g);
CountReport IsMaximal(const PlaneCurve& curve, const FieldCtx& ctx,
                      unsigned threads = 1);

// Gradient test at a point of the curve; throws PointNotOnCurve otherwise.
bool IsSmoothAt(const PlaneCurve& curve, const ProjectivePoint& pt);
// Rational points where the gradient vanishes.
std::vector<ProjectivePoint> SingularRationalPoints(const PlaneCurve& curve,
                                                    const FieldCtx& ctx);

// Exact nonnegative-denominator fraction in lowest terms.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational Make(int64_t num, int64_t den);
  std::string ToString() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// floor((q^2 - q + 4) / 6), the genus above which a maximal curve is known to
// be covered by the Hermitian curve.
int64_t LemmaThreshold(int64_t q);
// 1 + (LemmaThreshold(q) - 1) / d_S.
Rational CorollaryThreshold(int64_t q, int64_t d_s);
// g > threshold, decided exactly.
bool ExceedsThreshold(int64_t g, const Rational& threshold);
// ell >= (8 g - 2)^2: the regime where the full rational point set generates
// the whole Jacobian.
bool VolochBoundTrivial(int64_t ell, int64_t g_tilde);

}  // namespace maxcurve

#endif  // MAXCURVE_PLANE_H_
