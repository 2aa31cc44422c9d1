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

#include "maxcurve/special_set.h"

#include <algorithm>
#include <set>

#include "maxcurve/error.h"

namespace maxcurve {
namespace {

bool IsFundamental(const ProjectivePoint& pt) {
  const int zeros = pt.x().IsZero() + pt.y().IsZero() + pt.z().IsZero();
  return zeros == 2;
}

}  // namespace

std::vector<ProjectivePoint> FundamentalPoints(const FieldCtx& ctx) {
  const Element zero = ctx.Zero(), one = ctx.One();
  return {ProjectivePoint(one, zero, zero), ProjectivePoint(zero, one, zero),
          ProjectivePoint(zero, zero, one)};
}

void RequireMatchingField(const HurwitzParams& params, const FieldCtx& ctx) {
  if (ctx.q() != params.q) {
    throw Error(ErrorKind::kInvalidParams,
                "field has q = " + std::to_string(ctx.q()) + ", expected " +
                    std::to_string(params.q));
  }
}

bool ResidueCondition(const Element& x, const HurwitzParams& params) {
  return InSubfield(x.Pow(params.ResidueExponent()));
}

SplitSet SplitSet::FromPoints(const HurwitzParams& params,
                              std::vector<ProjectivePoint> points) {
  SplitSet s;
  s.params = params;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::set<ProjectivePoint> images;
  for (const auto& pt : points) {
    if (IsFundamental(pt)) continue;
    ++s.affine_count;
    images.insert(PiProject(pt, params.n));
  }
  s.t = images.size();
  s.points = std::move(points);
  return s;
}

SplitSet BuildS(const HurwitzParams& params, const FieldCtx& ctx) {
  RequireMatchingField(params, ctx);
  const uint32_t n = params.n;
  std::vector<ProjectivePoint> points;
  const auto size = static_cast<uint32_t>(ctx.order());
  for (uint32_t uc = 1; uc < size; ++uc) {
    const Element u = ctx.FromCode(uc);
    const Element u_inv = u.Inverse();
    const Element u_pow = u.Pow(n - 1);
    for (uint32_t vc = 1; vc < size; ++vc) {
      const Element v = ctx.FromCode(vc);
      const Element a = u_pow * v;
      const Element b = u_inv * v.Pow(n);
      if (!(a + b + ctx.One()).IsZero()) continue;
      if (ResidueCondition(a, params) && ResidueCondition(b, params)) {
        points.push_back(ProjectivePoint::Affine(u, v));
      }
    }
  }
  SplitSet s;
  s.params = params;
  s.affine_count = points.size();
  for (auto& pt : FundamentalPoints(ctx)) points.push_back(pt);
  std::sort(points.begin(), points.end());
  s.points = std::move(points);
  s.t = CountT(params, ctx);
  return s;
}

ProjectivePoint PiProject(const ProjectivePoint& pt, uint32_t n) {
  const FieldCtx& ctx = pt.ctx();
  const Element zero = ctx.Zero(), one = ctx.One(), minus_one = -one;
  const bool x0 = pt.x().IsZero(), y0 = pt.y().IsZero(), z0 = pt.z().IsZero();
  if (y0 && z0) return ProjectivePoint(minus_one, zero, one);
  if (x0 && z0) return ProjectivePoint(minus_one, one, zero);
  if (x0 && y0) return ProjectivePoint(zero, minus_one, one);
  if (z0 || x0 || y0) {
    throw Error(ErrorKind::kUndefinedAtPoint, pt.ToString());
  }
  const Element& u = pt.x();
  const Element& v = pt.y();
  return ProjectivePoint::Affine(u.Pow(n - 1) * v, u.Inverse() * v.Pow(n));
}

std::vector<ProjectivePoint> PiFiber(const ProjectivePoint& image,
                                     const HurwitzParams& params,
                                     const FieldCtx& ctx) {
  RequireMatchingField(params, ctx);
  if (!LineL().Contains(image)) {
    throw Error(ErrorKind::kPointNotOnCurve,
                image.ToString() + " is not on the line");
  }
  for (const auto& p : FundamentalPoints(ctx)) {
    if (PiProject(p, params.n) == image) return {p};
  }
  // u^{n-1} v = a and u^{-1} v^n = b force u^d = a^n / b, v = a u^{1-n}.
  const Element& a = image.x();
  const Element& b = image.y();
  std::vector<ProjectivePoint> fiber;
  for (const Element& u : DthRoots(a.Pow(params.n) / b, params.d)) {
    const Element v = a * u.Inverse().Pow(params.n - 1);
    fiber.push_back(ProjectivePoint::Affine(u, v));
  }
  std::sort(fiber.begin(), fiber.end());
  return fiber;
}

uint64_t CountT(const HurwitzParams& params, const FieldCtx& ctx) {
  RequireMatchingField(params, ctx);
  const Element minus_one = -ctx.One();
  uint64_t t = 0;
  for (const Element& x : ctx.Elements()) {
    if (x.IsZero() || x == minus_one) continue;
    const Element y = minus_one - x;
    if (ResidueCondition(x, params) && ResidueCondition(y, params)) ++t;
  }
  return t;
}

SplitCountReport VerifySplitCounts(const HurwitzParams& params, const FieldCtx& ctx) {
  const SplitSet s = BuildS(params, ctx);
  const uint64_t q = params.q, d = params.d, e = params.ResidueExponent();
  SplitCountReport r;
  r.s_count = s.points.size();
  r.s_expected = (q + 1) * (q + 1) / d + q * (d - 3);
  r.t = s.t;
  r.t_expected = q + e * e - 3 * e;
  r.t_closed_form = e * e - 1;
  r.s_holds = r.s_count == r.s_expected;
  r.t_holds = r.t == r.t_expected;
  r.closed_form_applies = d == 3;
  r.closed_form_holds = r.t == r.t_closed_form;
  r.affine_is_d_times_t = s.affine_count == d * s.t;
  return r;
}

const std::vector<CoordTriple>& Q11CandidateTriples() {
  static const std::vector<CoordTriple> kTriples = {
      {1, -2, 4},  {-2, 1, -4}, {2, -3, 4}, {-3, 2, -4},
      {3, -4, 3},  {-4, 3, -3}, {4, -5, 9}, {-5, 4, -9}};
  return kTriples;
}

const std::vector<CoordTriple>& Q11ExcludedTriples() {
  static const std::vector<CoordTriple> kTriples = {{3, -4, 3}, {-4, 3, -3}};
  return kTriples;
}

CaseAnalysisReport VerifyCaseAnalysis(const HurwitzParams& params,
                                      const FieldCtx& ctx) {
  RequireMatchingField(params, ctx);
  CaseAnalysisReport r;
  const std::vector<uint32_t> kAlphaModulus = {1, 1, 1};
  if (params.n != 2 || (params.q != 5 && params.q != 11)) {
    r.note = "case analysis exists only for n = 2, q in {5, 11}";
    return r;
  }
  if (ctx.modulus() != kAlphaModulus) {
    r.note = "skipped: triples are stated in the basis x^2+x+1, field uses " +
             ctx.ModulusString();
    return r;
  }
  r.applicable = true;
  const auto p = static_cast<int64_t>(ctx.p());
  const Element alpha = ctx.Generator();
  for (int64_t a = 0; a < p; ++a) {
    const int64_t c = ((-1 - a) % p + p) % p;
    for (int64_t b = 1; b < p; ++b) {
      const Element x = ctx.FromInt(a) + ctx.FromInt(b) * alpha;
      const Element y = ctx.FromInt(c) - ctx.FromInt(b) * alpha;
      if (ResidueCondition(x, params) && ResidueCondition(y, params)) {
        r.found.push_back({a, c, b});
      }
    }
  }
  if (params.q == 11) {
    auto reduce = [p](int64_t v) { return ((v % p) + p) % p; };
    for (const auto& cand : Q11CandidateTriples()) {
      if (std::find(Q11ExcludedTriples().begin(), Q11ExcludedTriples().end(),
                    cand) != Q11ExcludedTriples().end()) {
        continue;
      }
      r.expected.push_back({reduce(cand.a), reduce(cand.c), reduce(cand.b)});
    }
  }
  std::sort(r.expected.begin(), r.expected.end());
  std::sort(r.found.begin(), r.found.end());
  r.matches = r.found == r.expected;
  return r;
}

}  // namespace maxcurve
