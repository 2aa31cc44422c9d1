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

#include "maxcurve/coverings.h"

#include <algorithm>

#include "maxcurve/error.h"
#include "maxcurve/families.h"

namespace maxcurve {

ProjectivePoint Psi(const ProjectivePoint& pt, uint32_t n) {
  const Element &x = pt.x(), &y = pt.y(), &z = pt.z();
  return ProjectivePoint(x.Pow(n) * z, x * y.Pow(n), y * z.Pow(n));
}

std::vector<ProjectivePoint> PsiFiber(const ProjectivePoint& target,
                                      const HurwitzParams& params,
                                      const FieldCtx& ctx) {
  RequireMatchingField(params, ctx);
  if (!Hurwitz(params).Contains(target)) {
    throw Error(ErrorKind::kPointNotOnCurve, target.ToString() + " not on H_n");
  }
  const uint32_t n = params.n, d = params.d;
  const Element zero = ctx.Zero(), one = ctx.One(), minus_one = -one;
  const bool x0 = target.x().IsZero(), y0 = target.y().IsZero(),
             z0 = target.z().IsZero();
  std::vector<ProjectivePoint> fiber;
  if (y0 && z0) {
    for (const Element& r : DthRoots(minus_one, d)) fiber.emplace_back(r, zero, one);
  } else if (x0 && z0) {
    for (const Element& r : DthRoots(minus_one, d)) fiber.emplace_back(r, one, zero);
  } else if (x0 && y0) {
    for (const Element& r : DthRoots(minus_one, d)) fiber.emplace_back(zero, r, one);
  } else {
    const Element& u = target.x();
    const Element& v = target.y();
    const auto ratios = DthRoots(u.Pow(n) / v.Pow(n - 1), d);
    const auto ys = DthRoots(u.Inverse() * v.Pow(n), d);
    for (const Element& a : ratios) {
      for (const Element& y : ys) {
        ProjectivePoint cand = ProjectivePoint::Affine(a * y, y);
        if (Psi(cand, n) == target) fiber.push_back(std::move(cand));
      }
    }
  }
  std::sort(fiber.begin(), fiber.end());
  return fiber;
}

std::map<ProjectivePoint, std::vector<ProjectivePoint>> EnumerateFibers(
    const HurwitzParams& params, const FieldCtx& ctx, unsigned threads) {
  RequireMatchingField(params, ctx);
  std::map<ProjectivePoint, std::vector<ProjectivePoint>> fibers;
  for (const auto& pt : EnumeratePoints(Fermat(params.d, params.q), ctx, threads)) {
    fibers[Psi(pt, params.n)].push_back(pt);
  }
  return fibers;
}

bool IsPrimitiveRootOfUnity(const Element& eta, uint32_t d) {
  if (d == 0 || eta.IsZero() || !eta.Pow(d).IsOne()) return false;
  Element acc = eta;
  for (uint32_t k = 1; k < d; ++k, acc *= eta) {
    if (acc.IsOne()) return false;
  }
  return true;
}

Element PrimitiveRootOfUnity(const FieldCtx& ctx, uint32_t d) {
  for (const Element& r : RootsOfUnity(ctx, d)) {
    if (IsPrimitiveRootOfUnity(r, d)) return r;
  }
  throw Error(ErrorKind::kNotPrimitiveRoot,
              "no primitive " + std::to_string(d) + "-th root of unity");
}

ProjectivePoint Tau(const ProjectivePoint& pt, const Element& eta,
                    const HurwitzParams& params) {
  if (!IsPrimitiveRootOfUnity(eta, params.d)) {
    throw Error(ErrorKind::kNotPrimitiveRoot, eta.ToString());
  }
  return ProjectivePoint(eta * pt.x(), eta.Pow(params.n) * pt.y(), pt.z());
}

namespace {

// Compares the parametrized fibers with the enumerated ones over every point
// that has a rational preimage.
bool FibersAgree(
    const std::map<ProjectivePoint, std::vector<ProjectivePoint>>& fibers,
    const HurwitzParams& params, const FieldCtx& ctx) {
  for (const auto& [target, pts] : fibers) {
    if (PsiFiber(target, params, ctx) != pts) return false;
  }
  return true;
}

}  // namespace

CoveringReport VerifySplitting(const SplitSet& s, const FieldCtx& ctx,
                               bool cross_check, unsigned threads) {
  const HurwitzParams& params = s.params;
  const PlaneCurve fermat = Fermat(params.d, params.q);
  CoveringReport r;
  r.degree = params.d;
  r.s_count = s.points.size();
  r.unramified = true;
  for (const auto& target : s.points) {
    const auto fiber = PsiFiber(target, params, ctx);
    ++r.fiber_histogram[fiber.size()];
    const bool full =
        fiber.size() == params.d &&
        std::all_of(fiber.begin(), fiber.end(), [&](const ProjectivePoint& f) {
          return fermat.Contains(f) && Psi(f, params.n) == target;
        });
    if (full) {
      ++r.split_points;
    } else {
      r.unramified = false;
    }
  }
  if (cross_check) {
    const auto fibers = EnumerateFibers(params, ctx, threads);
    bool agree = FibersAgree(fibers, params, ctx);
    for (const auto& target : s.points) {
      const auto it = fibers.find(target);
      const auto fiber = PsiFiber(target, params, ctx);
      if (it == fibers.end() ? !fiber.empty() : it->second != fiber) {
        agree = false;
      }
    }
    r.cross_check_agrees = agree;
  }
  return r;
}

CoveringReport VerifyTheoremInstance(const SplitSet& s, const FieldCtx& ctx,
                                     bool cross_check, unsigned threads) {
  const HurwitzParams& params = s.params;
  CoveringReport r = VerifySplitting(s, ctx, false, threads);
  const auto fibers = EnumerateFibers(params, ctx, threads);
  for (const auto& [target, pts] : fibers) {
    ++r.full_fiber_histogram[pts.size()];
    r.fermat_count += pts.size();
    if (pts.size() != params.d) r.unramified = false;
  }
  if (cross_check) r.cross_check_agrees = FibersAgree(fibers, params, ctx);

  const PlaneCurve fermat = Fermat(params.d, params.q);
  const PlaneCurve hurwitz = Hurwitz(params);
  const auto q = static_cast<int64_t>(params.q);
  const auto d = static_cast<int64_t>(params.d);
  const int64_t g = *hurwitz.genus();
  const int64_t g_prime = *fermat.genus();
  const auto s_count = static_cast<int64_t>(s.points.size());

  const CountReport fermat_report = IsMaximal(fermat, ctx, threads);
  const CountReport hurwitz_report = IsMaximal(hurwitz, ctx, threads);
  r.hurwitz_count = hurwitz_report.count;
  r.fermat_maximal = fermat_report.maximal;
  r.hurwitz_maximal = hurwitz_report.maximal;
  r.hypothesis_i = ((q + 1) * (q + 1)) % d == 0;
  r.hypothesis_ii = s_count == (q + 1) * (q + 1) / d + q * (2 * g - 2);
  r.count_identity = d * s_count == static_cast<int64_t>(fermat_report.count) &&
                     fermat_report.count == r.fermat_count;
  r.rh_identity = 2 * g_prime - 2 == d * (2 * g - 2);
  return r;
}

CorollaryReport VerifyCorollaryInstance(const SplitSet& s) {
  const HurwitzParams& params = s.params;
  CorollaryReport r;
  r.g = params.Genus();
  r.d_s = params.d;
  const auto q = static_cast<int64_t>(params.q);
  r.bound = CorollaryThreshold(q, r.d_s);
  r.hypothesis_holds = ExceedsThreshold(r.g, r.bound);
  r.g_prime = r.d_s * (r.g - 1) + 1;
  r.lemma_threshold = LemmaThreshold(q);
  r.g_prime_exceeds_lemma = r.g_prime > r.lemma_threshold;
  r.fermat_genus = (r.d_s - 1) * (r.d_s - 2) / 2;
  r.g_prime_matches_fermat = r.g_prime == r.fermat_genus;
  return r;
}

}  // namespace maxcurve
