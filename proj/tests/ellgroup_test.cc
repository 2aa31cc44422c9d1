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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "maxcurve/error.h"
#include "maxcurve/special_set.h"

namespace maxcurve {
namespace {

class EllGroupTest : public ::testing::TestWithParam<uint32_t> {
 protected:
  void SetUp() override {
    ctx_ = FieldCtx::Make(GetParam(), 1);
    group_ = std::make_unique<EllipticGroup>(ctx_);
    params_ = HurwitzParams::Make(2, GetParam());
  }
  std::vector<EllPoint> PhiOfS() const {
    std::vector<EllPoint> out;
    for (const auto& pt : BuildS(params_, *ctx_).points) out.push_back(group_->Phi(pt));
    std::sort(out.begin(), out.end());
    return out;
  }
  FieldPtr ctx_;
  std::unique_ptr<EllipticGroup> group_;
  HurwitzParams params_;
};

bool Collinear(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
  const Element det = a.x() * (b.y() * c.z() - b.z() * c.y()) -
                      a.y() * (b.x() * c.z() - b.z() * c.x()) +
                      a.z() * (b.x() * c.y() - b.y() * c.x());
  return det.IsZero();
}

TEST_P(EllGroupTest, PhiOnFundamentalPoints) {
  const auto fund = FundamentalPoints(*ctx_);
  const Element one = ctx_->One(), zero = ctx_->Zero();
  EXPECT_EQ(group_->Phi(fund[0]).point(), ProjectivePoint(zero, one, one));
  EXPECT_EQ(group_->Phi(fund[1]).point(), ProjectivePoint(zero, -one, one));
  EXPECT_EQ(group_->Phi(fund[2]).point(), ProjectivePoint(zero, one, zero));
  EXPECT_TRUE(group_->Phi(fund[2]).IsNeutral());
  try {
    group_->Phi(ProjectivePoint::Affine(one, one));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPointNotOnCurve);
  }
}

TEST_P(EllGroupTest, PhiIsABijectionOfRationalPoints) {
  const auto h2 = EnumeratePoints(Hurwitz(params_), *ctx_);
  std::set<EllPoint> image;
  for (const auto& pt : h2) image.insert(group_->Phi(pt));
  EXPECT_EQ(image.size(), h2.size());
  EXPECT_EQ(group_->Points().size(), h2.size());
  const uint64_t q = GetParam();
  EXPECT_EQ(group_->Points().size(), (q + 1) * (q + 1));
}

TEST_P(EllGroupTest, ChordTangentAgreesWithCollinearity) {
  const auto& pts = group_->Points();
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const EllPoint& p = pts[pick(rng)];
    const EllPoint& q = pts[pick(rng)];
    const EllPoint r = group_->Add(p, q);
    ASSERT_TRUE(group_->Contains(r.point()));
    if (p == q || p.IsNeutral() || q.IsNeutral()) continue;
    EXPECT_TRUE(Collinear(p.point(), q.point(), group_->Negate(r).point()));
  }
}

TEST_P(EllGroupTest, GroupAxioms) {
  const auto& pts = group_->Points();
  const EllPoint o = group_->Neutral();
  for (const auto& p : pts) {
    EXPECT_EQ(group_->Add(p, o), p);
    EXPECT_EQ(group_->Add(o, p), p);
    EXPECT_TRUE(group_->Add(p, group_->Negate(p)).IsNeutral());
    if (!p.IsNeutral()) {
      EXPECT_EQ(group_->Negate(p).x(), p.x());
      EXPECT_EQ(group_->Negate(p).y(), -p.y());
    }
  }
  if (GetParam() == 5) {
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const EllPoint ab = group_->Add(a, b);
        ASSERT_EQ(ab, group_->Add(b, a));
        for (const auto& c : pts) {
          ASSERT_EQ(group_->Add(ab, c), group_->Add(a, group_->Add(b, c)));
        }
      }
  } else {
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 20000; ++i) {
      const auto &a = pts[pick(rng)], &b = pts[pick(rng)], &c = pts[pick(rng)];
      ASSERT_EQ(group_->Add(group_->Add(a, b), c), group_->Add(a, group_->Add(b, c)));
      ASSERT_EQ(group_->Add(a, b), group_->Add(b, a));
    }
  }
}

TEST_P(EllGroupTest, MultiplyMatchesRepeatedAddition) {
  for (const auto& p : group_->Points()) {
    EllPoint acc = group_->Neutral();
    for (uint64_t k = 0; k < 8; ++k) {
      EXPECT_EQ(group_->Multiply(k, p), acc);
      acc = group_->Add(acc, p);
    }
  }
}

TEST_P(EllGroupTest, PhiOfSIsClosedWithIndexThree) {
  const auto phi_s = PhiOfS();
  const Subgroup sub = group_->Closure(phi_s);
  EXPECT_EQ(sub.elements, phi_s);
  EXPECT_EQ(sub.order, phi_s.size());
  const uint64_t q = GetParam();
  EXPECT_EQ(sub.order, (q + 1) * (q + 1) / 3);
  EXPECT_EQ(group_->IndexDS(phi_s), 3u);
  EXPECT_EQ(group_->IndexDS(group_->Points()), 1u);
  EXPECT_EQ(group_->IndexDS({group_->Neutral()}), (q + 1) * (q + 1));
}

TEST_P(EllGroupTest, ResidueLocusDescribesPhiOfS) {
  std::vector<EllPoint> locus;
  for (const auto& p : group_->Points()) {
    if (group_->InResidueLocus(p)) locus.push_back(p);
  }
  EXPECT_EQ(locus, PhiOfS());
}

TEST_P(EllGroupTest, ClosureOfTwoGeneratorsIsASubgroup) {
  const auto& pts = group_->Points();
  std::mt19937 rng(9);
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const Subgroup sub = group_->Closure({pts[pick(rng)], pts[pick(rng)]});
    EXPECT_EQ(pts.size() % sub.order, 0u);
    std::set<EllPoint> members(sub.elements.begin(), sub.elements.end());
    for (const auto& a : sub.elements) {
      EXPECT_TRUE(members.count(group_->Negate(a)));
      for (const auto& b : sub.elements) ASSERT_TRUE(members.count(group_->Add(a, b)));
    }
  }
}

TEST_P(EllGroupTest, Torsion) {
  const TorsionReport r = group_->CheckTorsion();
  const uint64_t q = GetParam();
  EXPECT_EQ(r.order, (q + 1) * (q + 1));
  EXPECT_EQ(r.not_killed, 0u);
  EXPECT_TRUE(r.ok());
}

TEST_P(EllGroupTest, ChordIdentityHoldsForDistinctAbscissae) {
  const auto& pts = group_->Points();
  uint64_t checked = 0;
  for (const auto& p : pts)
    for (const auto& q : pts) {
      const auto r = ChordIdentityHolds(*group_, p, q);
      if (!r) continue;
      ++checked;
      EXPECT_TRUE(*r) << p.point().ToString() << " " << q.point().ToString();
    }
  EXPECT_GT(checked, 0u);
}

TEST_P(EllGroupTest, DoublingIdentity) {
  uint64_t literal_fail = 0, checked = 0;
  for (const auto& p : group_->Points()) {
    const auto r = DoublingIdentityHolds(*group_, p);
    if (!r) continue;
    ++checked;
    EXPECT_TRUE(*r) << p.point().ToString();
    const EllPoint d = group_->Add(p, p);
    const Element y1 = p.y(), y3 = d.y(), one = ctx_->One();
    const Element three = ctx_->FromInt(3);
    literal_fail += ctx_->FromInt(4) * (y3 - one) != (y1 + one) * (y1 - three).Pow(3);
  }
  EXPECT_GT(checked, 0u);
  // The form without the 2 y1^3 factor does not hold in general.
  EXPECT_GT(literal_fail, 0u);
}

TEST_P(EllGroupTest, SubstitutionIdentity) {
  const auto& pts = group_->Points();
  uint64_t checked = 0, negative_sign_holds = 0;
  for (const auto& p : pts)
    for (const auto& q : pts) {
      const auto r = SubstitutionIdentityHolds(*group_, p, q);
      if (!r) continue;
      ++checked;
      EXPECT_TRUE(*r);
      // Direct evaluation with the opposite sign on the right.
      const Element one = ctx_->One();
      auto v_of = [&](const EllPoint& e) { return (e.y() - one) / (ctx_->FromInt(2) * e.x() * e.x()); };
      auto a_of = [&](const EllPoint& e) { return e.x().Inverse() * v_of(e); };
      const EllPoint s = group_->Add(p, q);
      const Element lhs = ctx_->FromInt(4) * (s.y() - one) * (q.x() - p.x()).Pow(3);
      const Element a1 = a_of(p), a2 = a_of(q);
      const Element rhs = ctx_->FromInt(8) * (v_of(q) - v_of(p)).Pow(3) / (a1 * a1 * a2 * a2);
      EXPECT_EQ(lhs, rhs);
      negative_sign_holds += lhs == -rhs;
    }
  EXPECT_GT(checked, 0u);
  EXPECT_LT(negative_sign_holds, checked);
}

INSTANTIATE_TEST_SUITE_P(Fields, EllGroupTest, ::testing::Values(5u, 11u));

TEST(EllGroupErrorsTest, Characteristic) {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {3u, 3u}}) {
    try {
      EllipticGroup g(FieldCtx::Make(p, m));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kBadCharacteristic);
    }
  }
}

TEST(EllGroupErrorsTest, PointNotOnCurve) {
  EllipticGroup g(FieldCtx::Make(5, 1));
  try {
    g.Affine(g.ctx().One(), g.ctx().One());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPointNotOnCurve);
  }
}

TEST(EllGroupErrorsTest, ResidueLocusNeedsThreeDividingQPlusOne) {
  EllipticGroup g(FieldCtx::Make(7, 1));
  try {
    g.InResidueLocus(g.Points().back());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisibilityViolated);
  }
}

}  // namespace
}  // namespace maxcurve
