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

#include "maxcurve/plane.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "maxcurve/error.h"

namespace maxcurve {

ProjectivePoint::ProjectivePoint(Element x, Element y, Element z) {
  if (!z.IsZero()) {
    const Element inv = z.Inverse();
    x_ = x * inv;
    y_ = y * inv;
    z_ = z.ctx().One();
  } else if (!y.IsZero()) {
    const Element inv = y.Inverse();
    x_ = x * inv;
    y_ = y.ctx().One();
    z_ = z;
  } else if (!x.IsZero()) {
    x_ = x.ctx().One();
    y_ = y;
    z_ = z;
  } else {
    throw Error(ErrorKind::kInvalidParams, "(0:0:0) is not a projective point");
  }
}

ProjectivePoint ProjectivePoint::Affine(Element x, Element y) {
  const Element one = x.ctx().One();
  return ProjectivePoint(std::move(x), std::move(y), one);
}

int ProjectivePoint::Chart() const {
  if (!z_.IsZero()) return 0;
  if (!y_.IsZero()) return 1;
  return 2;
}

uint64_t ProjectivePoint::Key() const {
  const uint64_t n = ctx().order();
  switch (Chart()) {
    case 0: return uint64_t{x_.code()} * n + y_.code();
    case 1: return n * n + x_.code();
    default: return n * n + n;
  }
}

std::string ProjectivePoint::ToString() const {
  return "(" + x_.ToString() + ":" + y_.ToString() + ":" + z_.ToString() + ")";
}

HomogeneousPoly::HomogeneousPoly(std::vector<Monomial> terms) {
  // Merge like monomials and drop zero coefficients.
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, int64_t> merged;
  for (const auto& t : terms) merged[{t.ex, t.ey, t.ez}] += t.coeff;
  bool first = true;
  for (const auto& [exps, c] : merged) {
    if (c == 0) continue;
    const auto [ex, ey, ez] = exps;
    const uint32_t deg = ex + ey + ez;
    if (first) {
      degree_ = deg;
      first = false;
    } else if (deg != degree_) {
      throw Error(ErrorKind::kInvalidParams, "polynomial is not homogeneous");
    }
    terms_.push_back({c, ex, ey, ez});
  }
}

HomogeneousPoly::HomogeneousPoly(std::vector<Monomial> terms, uint32_t degree)
    : terms_(std::move(terms)), degree_(degree) {}

Element HomogeneousPoly::Evaluate(const Element& x, const Element& y,
                                  const Element& z) const {
  const FieldCtx& ctx = x.ctx();
  Element acc = ctx.Zero();
  for (const auto& t : terms_) {
    const Element c = ctx.FromInt(t.coeff);
    if (c.IsZero()) continue;
    acc += c * x.Pow(t.ex) * y.Pow(t.ey) * z.Pow(t.ez);
  }
  return acc;
}

HomogeneousPoly HomogeneousPoly::Derivative(Var v) const {
  std::vector<Monomial> out;
  for (auto t : terms_) {
    uint32_t& e = v == Var::kX ? t.ex : (v == Var::kY ? t.ey : t.ez);
    if (e == 0) continue;
    t.coeff *= e;
    --e;
    out.push_back(t);
  }
  HomogeneousPoly d(std::move(out));
  if (d.IsZero()) d.degree_ = degree_ == 0 ? 0 : degree_ - 1;
  return d;
}

std::string HomogeneousPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto var = [&os](char name, uint32_t e) {
    if (e == 0) return;
    os << name;
    if (e > 1) os << '^' << e;
  };
  for (const auto& t : terms_) {
    int64_t c = t.coeff;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool constant = t.ex + t.ey + t.ez == 0;
    if (c != 1 || constant) os << c;
    var('X', t.ex);
    var('Y', t.ey);
    var('Z', t.ez);
  }
  return os.str();
}

PlaneCurve PlaneCurve::Smooth(HomogeneousPoly poly, std::string label) {
  const int64_t d = poly.degree();
  const int64_t genus = (d - 1) * (d - 2) / 2;
  return PlaneCurve(std::move(poly), genus, true, std::move(label));
}

PlaneCurve PlaneCurve::Generic(HomogeneousPoly poly, std::string label) {
  return PlaneCurve(std::move(poly), std::nullopt, false, std::move(label));
}

namespace {

void ScanAffineRange(const PlaneCurve& curve, const FieldCtx& ctx,
                     uint32_t begin, uint32_t end,
                     std::vector<ProjectivePoint>& out) {
  const auto n = static_cast<uint32_t>(ctx.order());
  const Element one = ctx.One();
  for (uint32_t xc = begin; xc < end; ++xc) {
    const Element x = ctx.FromCode(xc);
    for (uint32_t yc = 0; yc < n; ++yc) {
      const Element y = ctx.FromCode(yc);
      if (curve.poly().Evaluate(x, y, one).IsZero()) {
        out.push_back(ProjectivePoint::Affine(x, y));
      }
    }
  }
}

}  // namespace

std::vector<ProjectivePoint> EnumeratePoints(const PlaneCurve& curve,
                                             const FieldCtx& ctx,
                                             unsigned threads) {
  const auto n = static_cast<uint32_t>(ctx.order());
  threads = std::clamp(threads, 1u, n);
  std::vector<std::vector<ProjectivePoint>> parts(threads);
  if (threads == 1) {
    ScanAffineRange(curve, ctx, 0, n, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const uint32_t begin = static_cast<uint32_t>(uint64_t{n} * t / threads);
      const uint32_t end = static_cast<uint32_t>(uint64_t{n} * (t + 1) / threads);
      workers.emplace_back(ScanAffineRange, std::cref(curve), std::cref(ctx),
                           begin, end, std::ref(parts[t]));
    }
    for (auto& w : workers) w.join();
  }
  std::vector<ProjectivePoint> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());

  const Element zero = ctx.Zero(), one = ctx.One();
  for (uint32_t xc = 0; xc < n; ++xc) {
    const Element x = ctx.FromCode(xc);
    if (curve.poly().Evaluate(x, one, zero).IsZero()) {
      out.emplace_back(x, one, zero);
    }
  }
  if (curve.poly().Evaluate(one, zero, zero).IsZero()) {
    out.emplace_back(one, zero, zero);
  }
  return out;
}

int64_t WeilUpperBound(int64_t q, int64_t g) {
  return (q + 1) * (q + 1) + q * (2 * g - 2);
}

CountReport IsMaximal(const PlaneCurve& curve, const FieldCtx& ctx,
                      unsigned threads) {
  if (!curve.genus()) {
    throw Error(ErrorKind::kGenusUnknown, curve.label() + " has no genus");
  }
  CountReport r;
  r.label = curve.label();
  r.q = ctx.q();
  r.genus = *curve.genus();
  r.count = EnumeratePoints(curve, ctx, threads).size();
  r.weil_upper = WeilUpperBound(static_cast<int64_t>(r.q), r.genus);
  r.maximal = static_cast<int64_t>(r.count) == r.weil_upper;
  return r;
}

bool IsSmoothAt(const PlaneCurve& curve, const ProjectivePoint& pt) {
  if (!curve.Contains(pt)) {
    throw Error(ErrorKind::kPointNotOnCurve, pt.ToString());
  }
  for (Var v : {Var::kX, Var::kY, Var::kZ}) {
    if (!curve.poly().Derivative(v).Evaluate(pt).IsZero()) return true;
  }
  return false;
}

std::vector<ProjectivePoint> SingularRationalPoints(const PlaneCurve& curve,
                                                    const FieldCtx& ctx) {
  std::vector<ProjectivePoint> out;
  for (const auto& pt : EnumeratePoints(curve, ctx)) {
    if (!IsSmoothAt(curve, pt)) out.push_back(pt);
  }
  return out;
}

Rational Rational::Make(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorKind::kInvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int64_t LemmaThreshold(int64_t q) { return (q * q - q + 4) / 6; }

Rational CorollaryThreshold(int64_t q, int64_t d_s) {
  if (d_s < 1) throw Error(ErrorKind::kInvalidParams, "d_S must be positive");
  return Rational::Make(d_s + LemmaThreshold(q) - 1, d_s);
}

bool ExceedsThreshold(int64_t g, const Rational& threshold) {
  return g * threshold.den > threshold.num;
}

bool VolochBoundTrivial(int64_t ell, int64_t g_tilde) {
  const int64_t b = 8 * g_tilde - 2;
  return ell >= b * b;
}

}  // namespace maxcurve
