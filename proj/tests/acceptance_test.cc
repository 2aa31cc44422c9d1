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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "maxcurve/coverings.h"
#include "maxcurve/ellgroup.h"
#include "maxcurve/families.h"
#include "maxcurve/ffield.h"
#include "maxcurve/plane.h"
#include "maxcurve/special_set.h"

namespace maxcurve {
namespace {

int g_failures = 0;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void Require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [violated: " << what << "]";
    }
  }
};

// Runs body, checks its wall time against limit_s (0 = no limit) and prints
// the verdict.
void Criterion(int id, const char* title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.ok = false;
    out.detail << " [runtime " << secs << " s >= " << limit_s << " s]";
  }
  std::printf("%s [%2d] %s (%.3f s)%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.detail.str().c_str());
  if (!out.ok) ++g_failures;
}

struct Setup {
  FieldPtr ctx;
  HurwitzParams params;
};

Setup Make(uint32_t n, uint32_t p, uint32_t m,
           std::optional<std::vector<uint32_t>> modulus = std::nullopt) {
  Setup s{FieldCtx::Make(p, m, std::move(modulus)), {}};
  s.params = HurwitzParams::Make(n, s.ctx->q());
  return s;
}

std::vector<EllPoint> PhiOfS(const EllipticGroup& g, const SplitSet& s) {
  std::vector<EllPoint> out;
  for (const auto& pt : s.points) out.push_back(g.Phi(pt));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Run() {
  Criterion(1, "split set at q=5: #S = 12, t = 3 = q-2", 1.0, [](Outcome& o) {
    auto s = Make(2, 5, 1, std::vector<uint32_t>{1, 1, 1});
    const SplitSet set = BuildS(s.params, *s.ctx);
    const uint64_t t = CountT(s.params, *s.ctx);
    o.detail << " #S=" << set.points.size() << " t=" << t;
    o.Require(set.points.size() == 12, "#S == 12");
    o.Require(t == 3 && t == s.ctx->q() - 2, "t == q - 2 == 3");
  });

  Criterion(2, "split set at q=11: #S = 48, t = 15 = q+4, six b!=0 triples", 1.0,
            [](Outcome& o) {
    auto s = Make(2, 11, 1, std::vector<uint32_t>{1, 1, 1});
    const SplitSet set = BuildS(s.params, *s.ctx);
    const uint64_t t = CountT(s.params, *s.ctx);
    const CaseAnalysisReport r = VerifyCaseAnalysis(s.params, *s.ctx);
    o.detail << " #S=" << set.points.size() << " t=" << t << " triples=" << r.found.size();
    o.Require(set.points.size() == 48, "#S == 48");
    o.Require(t == 15 && t == s.ctx->q() + 4, "t == q + 4 == 15");
    o.Require(r.applicable && r.matches && r.found.size() == 6, "triples match list");
    for (const auto& ex : Q11ExcludedTriples()) {
      const CoordTriple reduced{(ex.a % 11 + 11) % 11, (ex.c % 11 + 11) % 11,
                                (ex.b % 11 + 11) % 11};
      o.Require(std::find(r.found.begin(), r.found.end(), reduced) == r.found.end(),
                "excluded triple absent");
    }
  });

  Criterion(3, "closure of phi(S) equals phi(S) at q=5 and q=11", 5.0, [](Outcome& o) {
    for (uint32_t q : {5u, 11u}) {
      auto s = Make(2, q, 1);
      EllipticGroup g(s.ctx);
      const auto phi_s = PhiOfS(g, BuildS(s.params, *s.ctx));
      const Subgroup sub = g.Closure(phi_s);
      o.detail << " q=" << q << ":" << sub.order;
      o.Require(sub.elements == phi_s, "closure == phi(S)");
      o.Require(sub.order == (q == 5 ? 12u : 48u), "subgroup order");
    }
  });

  Criterion(4, "index d_S = 3, group orders 36 and 144", 0, [](Outcome& o) {
    for (uint32_t q : {5u, 11u}) {
      auto s = Make(2, q, 1);
      EllipticGroup g(s.ctx);
      const uint64_t idx = g.IndexDS(PhiOfS(g, BuildS(s.params, *s.ctx)));
      o.detail << " q=" << q << ": #X=" << g.Points().size() << " d_S=" << idx;
      o.Require(idx == 3, "d_S == 3");
      o.Require(g.Points().size() == (q == 5 ? 36u : 144u), "group order");
    }
  });

  Criterion(5, "genus 1 torsion: (q+1) kills X(F_q^2), #X = (q+1)^2", 0, [](Outcome& o) {
    for (uint32_t q : {5u, 11u}) {
      EllipticGroup g(FieldCtx::Make(q, 1));
      const TorsionReport r = g.CheckTorsion();
      o.detail << " q=" << q << ": order=" << r.order << " not_killed=" << r.not_killed;
      o.Require(r.ok() && r.order == (q + 1) * (q + 1), "torsion");
    }
  });

  struct CountCase {
    uint32_t n, p, m;
    uint64_t s, fermat;
  };
  const CountCase kCounts[] = {
      {2, 5, 1, 12, 36}, {2, 11, 1, 48, 144}, {3, 13, 1, 80, 560}, {3, 3, 3, 220, 1540}};
  for (const auto& c : kCounts) {
    auto s = Make(c.n, c.p, c.m);
    const std::string title = "counting identity d*#S = #F_d at (n,q)=(" +
                              std::to_string(c.n) + "," + std::to_string(s.ctx->q()) + ")";
    Criterion(6, title.c_str(), 30.0, [&](Outcome& o) {
      const SplitSet set = BuildS(s.params, *s.ctx);
      const uint64_t fermat = EnumeratePoints(Fermat(s.params.d, s.ctx->q()), *s.ctx).size();
      const uint64_t lhs = s.params.d * set.points.size();
      o.detail << " " << s.params.d << "*" << set.points.size() << "=" << lhs
               << " #F_d=" << fermat;
      o.Require(set.points.size() == c.s, "#S frozen value");
      o.Require(fermat == c.fermat, "#F_d frozen value");
      o.Require(lhs == fermat, "d*#S == #F_d");
    });
  }

  Criterion(7, "Riemann-Hurwitz 2g'-2 = d(2g-2) for all four parameter sets", 0,
            [&](Outcome& o) {
    for (const auto& c : kCounts) {
      auto s = Make(c.n, c.p, c.m);
      const int64_t g = *Hurwitz(s.params).genus();
      const int64_t gp = *Fermat(s.params.d, s.ctx->q()).genus();
      o.detail << " (" << c.n << "," << s.ctx->q() << "):g=" << g << ",g'=" << gp;
      o.Require(2 * gp - 2 == int64_t{s.params.d} * (2 * g - 2), "RH identity");
    }
  });

  Criterion(8, "maximality certificates and F_4/F_25 negative control", 0, [&](Outcome& o) {
    auto f25 = FieldCtx::Make(5, 1);
    const CountReport herm = IsMaximal(Hermitian(5), *f25);
    o.Require(herm.maximal && herm.count == 126, "Hermitian q=5 maximal, 126");
    const CountReport f3 = IsMaximal(Fermat(3, 5), *f25);
    o.Require(f3.maximal && f3.count == 36, "F_3/F_25 maximal, 36");
    auto f169 = FieldCtx::Make(13, 1);
    const CountReport f7 = IsMaximal(Fermat(7, 13), *f169);
    o.Require(f7.maximal && f7.count == 560, "F_7/F_169 maximal, 560");
    for (const auto& c : kCounts) {
      auto s = Make(c.n, c.p, c.m);
      const CountReport h = IsMaximal(Hurwitz(s.params), *s.ctx);
      o.detail << " H_" << c.n << "/q=" << s.ctx->q() << ":" << h.count;
      o.Require(h.maximal, "H_n maximal");
    }
    const CountReport f4 = IsMaximal(Fermat(4, 5), *f25);
    o.detail << " F_4/F_25:" << f4.count << "<" << f4.weil_upper;
    o.Require(!f4.maximal, "F_4/F_25 not maximal");
  });

  {
    auto f25 = FieldCtx::Make(5, 1);
    EllipticGroup g(f25);
    Criterion(9, "chord identity on every distinct-x pair of X(F_25)", 0, [&](Outcome& o) {
      uint64_t pairs = 0, bad = 0;
      const auto& pts = g.Points();
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
          const auto r = ChordIdentityHolds(g, pts[i], pts[j]);
          if (!r) continue;
          ++pairs;
          bad += !*r;
        }
      o.detail << " pairs=" << pairs << " counterexamples=" << bad;
      o.Require(pairs > 0 && bad == 0, "chord identity");
    });
    Criterion(9, "doubling identity 4(y3-1) = (y1+1)(y1-3)^3 on X(F_25), y1 != 0", 0,
              [&](Outcome& o) {
      const Element one = f25->One(), three = f25->FromInt(3), four = f25->FromInt(4);
      uint64_t points = 0, bad = 0, corrected = 0;
      for (const auto& p : g.Points()) {
        if (p.IsNeutral() || p.y().IsZero()) continue;
        ++points;
        const EllPoint d = g.Add(p, p);
        if (d.IsNeutral()) {
          ++bad;
          continue;
        }
        const Element y1 = p.y(), y3 = d.y();
        bad += four * (y3 - one) != (y1 + one) * (y1 - three).Pow(3);
        corrected += DoublingIdentityHolds(g, p).value_or(false);
      }
      o.detail << " points=" << points << " counterexamples=" << bad
               << "; 8y1^3(y3-1) = (y1+1)(y1-3)^3 holds at " << corrected << "/" << points;
      o.Require(bad == 0, "doubling identity as stated");
    });
  }

  Criterion(10, "covering fibers, ramification sections and deck transformation", 0,
            [&](Outcome& o) {
    for (const auto& c : kCounts) {
      auto s = Make(c.n, c.p, c.m);
      const uint32_t d = s.params.d;
      const SplitSet set = BuildS(s.params, *s.ctx);
      const CoveringReport r = VerifySplitting(set, *s.ctx);
      o.Require(r.split_points == set.points.size(), "every S-point splits into d points");
      const auto fund = FundamentalPoints(*s.ctx);
      for (size_t i = 0; i < fund.size(); ++i) {
        const auto fiber = PsiFiber(fund[i], s.params, *s.ctx);
        bool on_line = fiber.size() == d;
        for (const auto& pt : fiber) {
          const Element& coord = i == 0 ? pt.y() : i == 1 ? pt.z() : pt.x();
          on_line &= coord.IsZero();
        }
        o.Require(on_line, "fundamental fiber on coordinate line");
        o.Require(PiFiber(PiProject(fund[i], c.n), s.params, *s.ctx) ==
                      std::vector<ProjectivePoint>{fund[i]},
                  "pi-fiber over fundamental image is a singleton");
      }
      const Element eta = PrimitiveRootOfUnity(*s.ctx, d);
      for (const auto& [target, fiber] : EnumerateFibers(s.params, *s.ctx)) {
        o.Require(fiber.size() == d, "psi-fiber has d points");
        std::set<ProjectivePoint> orbit;
        ProjectivePoint cur = fiber.front();
        uint32_t order = 0;
        do {
          orbit.insert(cur);
          cur = Tau(cur, eta, s.params);
          ++order;
        } while (cur != fiber.front() && order <= d);
        o.Require(order == d, "tau order d on the fiber");
        o.Require(std::vector<ProjectivePoint>(orbit.begin(), orbit.end()) == fiber,
                  "tau transitive on the fiber");
      }
      // tau^k is the identity only for k = d.
      ProjectivePoint generic = EnumeratePoints(Fermat(d, s.ctx->q()), *s.ctx).back();
      for (const auto& pt : EnumeratePoints(Fermat(d, s.ctx->q()), *s.ctx)) {
        if (!pt.x().IsZero() && !pt.y().IsZero() && !pt.z().IsZero()) {
          generic = pt;
          break;
        }
      }
      ProjectivePoint cur = generic;
      for (uint32_t k = 1; k <= d; ++k) {
        cur = Tau(cur, eta, s.params);
        o.Require((cur == generic) == (k == d), "tau has exact order d");
      }
      o.detail << " (" << c.n << "," << s.ctx->q() << "):" << r.split_points << " split";
    }
  });

  Criterion(11, "property suites: field, group, determinism, Weil interval", 0,
            [](Outcome& o) {
    uint64_t counterexamples = 0;
    std::mt19937 rng(2026);
    for (auto [p, m] : {std::pair{5u, 1u}, {11u, 1u}, {13u, 1u}, {3u, 3u}}) {
      auto f = FieldCtx::Make(p, m);
      std::uniform_int_distribution<uint32_t> pick(0, f->order() - 1);
      for (int i = 0; i < 5000; ++i) {
        const Element a = f->FromCode(pick(rng)), b = f->FromCode(pick(rng)),
                      c = f->FromCode(pick(rng));
        counterexamples += (a + b) + c != a + (b + c);
        counterexamples += (a * b) * c != a * (b * c);
        counterexamples += a * (b + c) != a * b + a * c;
        counterexamples += a + b != b + a || a * b != b * a;
        counterexamples += !a.IsZero() && a * a.Inverse() != f->One();
        counterexamples += (a + b).Pow(f->q()) != a.Pow(f->q()) + b.Pow(f->q());
      }
    }
    o.detail << " field=" << counterexamples;
    uint64_t group_bad = 0;
    {
      EllipticGroup g(FieldCtx::Make(5, 1));
      const auto& pts = g.Points();
      for (const auto& a : pts) {
        group_bad += g.Add(a, g.Neutral()) != a;
        group_bad += !g.Add(a, g.Negate(a)).IsNeutral();
        for (const auto& b : pts) {
          const EllPoint ab = g.Add(a, b);
          group_bad += ab != g.Add(b, a);
          for (const auto& c : pts) group_bad += g.Add(ab, c) != g.Add(a, g.Add(b, c));
        }
      }
    }
    o.detail << " group=" << group_bad;
    uint64_t determinism_bad = 0, weil_bad = 0, curves = 0;
    auto check_curve = [&](const PlaneCurve& curve, const FieldCtx& f) {
      const auto once = EnumeratePoints(curve, f, 1);
      determinism_bad += once != EnumeratePoints(curve, f, 1);
      determinism_bad += once != EnumeratePoints(curve, f, 3);
      const int64_t q = f.q(), g = *curve.genus(), n = once.size();
      weil_bad += std::llabs(n - (q * q + 1)) > 2 * g * q;
      ++curves;
    };
    auto f25 = FieldCtx::Make(5, 1);
    auto f121 = FieldCtx::Make(11, 1);
    auto f169 = FieldCtx::Make(13, 1);
    auto f729 = FieldCtx::Make(3, 3);
    check_curve(LineL(), *f25);
    check_curve(Hermitian(5), *f25);
    check_curve(Fermat(3, 5), *f25);
    check_curve(Fermat(4, 5), *f25);
    check_curve(Hurwitz(HurwitzParams::Make(2, 5)), *f25);
    check_curve(WeierstrassModel(5), *f25);
    check_curve(Fermat(3, 11), *f121);
    check_curve(Hurwitz(HurwitzParams::Make(2, 11)), *f121);
    check_curve(WeierstrassModel(11), *f121);
    check_curve(Fermat(7, 13), *f169);
    check_curve(Hurwitz(HurwitzParams::Make(3, 13)), *f169);
    check_curve(Fermat(7, 27), *f729);
    check_curve(Hurwitz(HurwitzParams::Make(3, 27)), *f729);
    o.detail << " determinism=" << determinism_bad << " weil=" << weil_bad << " over "
             << curves << " curves";
    o.Require(counterexamples == 0, "field axioms");
    o.Require(group_bad == 0, "group axioms");
    o.Require(determinism_bad == 0, "enumeration determinism");
    o.Require(weil_bad == 0, "Weil interval");
  });
}

}  // namespace
}  // namespace maxcurve

int main() {
  maxcurve::Run();
  std::printf("%d criterion line(s) failed\n", maxcurve::g_failures);
  return maxcurve::g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
