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

#include "maxcurve/ellgroup.h"

#include <algorithm>
#include <unordered_set>

#include "maxcurve/error.h"
#include "maxcurve/families.h"

namespace maxcurve {

EllipticGroup::EllipticGroup(FieldPtr ctx)
    : ctx_(std::move(ctx)), curve_(WeierstrassModel(ctx_->q())) {
  for (const auto& pt : EnumeratePoints(curve_, *ctx_)) {
    points_.push_back(EllPoint(pt));
  }
}

EllPoint EllipticGroup::Neutral() const {
  return EllPoint(ProjectivePoint(ctx_->Zero(), ctx_->One(), ctx_->Zero()));
}

EllPoint EllipticGroup::Point(const ProjectivePoint& pt) const {
  if (!Contains(pt)) throw Error(ErrorKind::kPointNotOnCurve, pt.ToString());
  return EllPoint(pt);
}

EllPoint EllipticGroup::Affine(const Element& x, const Element& y) const {
  return Point(ProjectivePoint::Affine(x, y));
}

EllPoint EllipticGroup::Phi(const ProjectivePoint& h2_point) const {
  const Element& u = h2_point.x();
  const Element& v = h2_point.y();
  const Element& w = h2_point.z();
  if (!(u * u * v + v * v * w + w * w * u).IsZero()) {
    throw Error(ErrorKind::kPointNotOnCurve, h2_point.ToString() + " not on H_2");
  }
  const Element zero = ctx_->Zero(), one = ctx_->One();
  if (u.IsZero() && w.IsZero()) return Point(ProjectivePoint(zero, -one, one));
  if (u.IsZero() && v.IsZero()) return Neutral();
  const Element two = ctx_->FromInt(2);
  return Point(ProjectivePoint(u * w, two * v * w + u * u, u * u));
}

EllPoint EllipticGroup::Add(const EllPoint& p, const EllPoint& q) const {
  if (p.IsNeutral()) return q;
  if (q.IsNeutral()) return p;
  const Element &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  const Element quarter = ctx_->FromInt(4).Inverse();
  Element lambda, x3;
  if (x1 == x2) {
    // Same x: either Q = -P, or Q = P with a vertical tangent when y1 = 0.
    if (y1 == -y2) return Neutral();
    lambda = -ctx_->FromInt(6) * x1 * x1 / y1;
    x3 = -lambda * lambda * quarter - x1 - x1;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
    x3 = -lambda * lambda * quarter - x1 - x2;
  }
  const Element y3 = -(lambda * (x3 - x1) + y1);
  return EllPoint(ProjectivePoint::Affine(x3, y3));
}

EllPoint EllipticGroup::Negate(const EllPoint& p) const {
  if (p.IsNeutral()) return p;
  return EllPoint(ProjectivePoint::Affine(p.x(), -p.y()));
}

EllPoint EllipticGroup::Multiply(uint64_t k, const EllPoint& p) const {
  EllPoint result = Neutral();
  EllPoint base = p;
  while (k > 0) {
    if (k & 1) result = Add(result, base);
    base = Add(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup EllipticGroup::Closure(const std::vector<EllPoint>& gens) const {
  const uint64_t bound = (ctx_->q() + 1) * (ctx_->q() + 1);
  std::unordered_set<uint64_t> seen;
  std::vector<EllPoint> elements{Neutral()};
  seen.insert(Neutral().point().Key());
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      EllPoint sum = Add(elements[i], g);
      if (seen.insert(sum.point().Key()).second) {
        elements.push_back(std::move(sum));
        if (elements.size() > bound) {
          throw Error(ErrorKind::kNotDivisible,
                      "closure exceeded the group order bound (q+1)^2");
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.order = elements.size();
  s.elements = std::move(elements);
  s.generators = gens;
  std::sort(s.generators.begin(), s.generators.end());
  s.generators.erase(std::unique(s.generators.begin(), s.generators.end()),
                     s.generators.end());
  return s;
}

uint64_t EllipticGroup::IndexDS(const std::vector<EllPoint>& gens) const {
  const uint64_t sub = Closure(gens).order;
  const uint64_t full = points_.size();
  if (full % sub != 0) {
    throw Error(ErrorKind::kNotDivisible,
                std::to_string(sub) + " does not divide " + std::to_string(full));
  }
  return full / sub;
}

TorsionReport EllipticGroup::CheckTorsion() const {
  TorsionReport r;
  r.order = points_.size();
  r.expected_order = (ctx_->q() + 1) * (ctx_->q() + 1);
  for (const auto& p : points_) {
    if (!Multiply(ctx_->q() + 1, p).IsNeutral()) ++r.not_killed;
  }
  return r;
}

bool EllipticGroup::InResidueLocus(const EllPoint& p) const {
  if ((ctx_->q() + 1) % 3 != 0) {
    throw Error(ErrorKind::kDivisibilityViolated, "3 does not divide q + 1");
  }
  if (p.IsNeutral()) return true;
  return InSubfield((p.y() - ctx_->One()).Pow((ctx_->q() + 1) / 3));
}

std::optional<bool> ChordIdentityHolds(const EllipticGroup& g,
                                       const EllPoint& p, const EllPoint& q) {
  if (p.IsNeutral() || q.IsNeutral() || p.x() == q.x()) return std::nullopt;
  const FieldCtx& f = g.ctx();
  const EllPoint r = g.Add(p, q);
  const Element &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  const Element one = f.One(), dx = x2 - x1;
  const Element lhs = f.FromInt(4) * (r.y() - one) * dx * dx * dx;
  const Element rhs = (y2 - y1) * (y1 + y2 - y1 * y2 + f.FromInt(3)) +
                      f.FromInt(12) * x1 * x2 * x2 * (y1 + one) -
                      f.FromInt(12) * x1 * x1 * x2 * (y2 + one);
  return lhs == rhs;
}

std::optional<bool> DoublingIdentityHolds(const EllipticGroup& g,
                                          const EllPoint& p) {
  if (p.IsNeutral() || p.y().IsZero()) return std::nullopt;
  const FieldCtx& f = g.ctx();
  const EllPoint r = g.Add(p, p);
  if (r.IsNeutral()) return std::nullopt;
  const Element one = f.One(), y1 = p.y();
  const Element t = y1 - f.FromInt(3);
  return f.FromInt(8) * y1 * y1 * y1 * (r.y() - one) == (y1 + one) * t * t * t;
}

std::optional<bool> SubstitutionIdentityHolds(const EllipticGroup& g,
                                              const EllPoint& p,
                                              const EllPoint& q) {
  if (p.IsNeutral() || q.IsNeutral() || p.x() == q.x()) return std::nullopt;
  const FieldCtx& f = g.ctx();
  const Element one = f.One(), two = f.FromInt(2);
  for (const EllPoint* e : {&p, &q}) {
    if (e->x().IsZero() || e->y() == one) return std::nullopt;
  }
  auto coords = [&](const EllPoint& e) {
    const Element u = e.x().Inverse();
    const Element v = (e.y() - one) / (two * e.x() * e.x());
    return std::make_pair(v, u * v);
  };
  const auto [v1, a1] = coords(p);
  const auto [v2, a2] = coords(q);
  const EllPoint r = g.Add(p, q);
  const Element dx = q.x() - p.x(), dv = v2 - v1;
  const Element lhs = f.FromInt(4) * (r.y() - one) * dx * dx * dx;
  const Element rhs = f.FromInt(8) * dv * dv * dv / (a1 * a1 * a2 * a2);
  return lhs == rhs;
}

}  // namespace maxcurve
