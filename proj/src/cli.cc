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

#include "maxcurve/cli.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "maxcurve/coverings.h"
#include "maxcurve/ellgroup.h"
#include "maxcurve/error.h"
#include "maxcurve/families.h"
#include "maxcurve/report.h"
#include "maxcurve/special_set.h"

namespace maxcurve {

std::vector<uint32_t> ParsePolynomial(std::string_view text, uint32_t p) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (s.empty()) throw Error(ErrorKind::kInvalidParams, "empty polynomial");
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kInvalidParams,
                "bad polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](size_t& i) {
    uint64_t v = 0;
    const size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      if (v > (uint64_t{1} << 40)) fail("integer too large");
      ++i;
    }
    if (i == start) fail("expected a number at position " + std::to_string(i));
    return v;
  };

  std::vector<int64_t> acc;
  size_t i = 0;
  while (i < s.size()) {
    int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-' at position " + std::to_string(i));
    }
    if (i >= s.size()) fail("dangling sign");
    bool has_coeff = false;
    uint64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int(i);
      has_coeff = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'x') fail("expected x after '*'");
      }
    }
    uint64_t exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exponent = read_int(i);
        if (exponent > 64) fail("exponent too large");
      }
    } else if (!has_coeff) {
      fail("expected a term at position " + std::to_string(i));
    }
    if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
    acc[exponent] =
        (acc[exponent] + sign * static_cast<int64_t>(coeff % p)) % int64_t{p};
  }
  std::vector<uint32_t> out;
  for (int64_t c : acc) out.push_back(static_cast<uint32_t>((c % p + p) % p));
  poly::Trim(out);
  return out;
}

namespace {

const std::set<std::string> kCommands = {"count",    "maximal",  "build-s",
                                         "subgroup", "covering", "verify-all"};
const std::set<std::string> kCurves = {"hermitian", "hurwitz", "fermat",
                                       "weierstrass", "line"};
const std::set<std::string> kFormats = {"json", "csv", "text"};

Json ConfigJson(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.curve.empty()) j["curve"] = c.curve;
  if (c.n) j["n"] = *c.n;
  if (c.d) j["d"] = *c.d;
  if (c.q) j["q"] = *c.q;
  if (c.p) j["p"] = *c.p;
  if (c.m) j["m"] = *c.m;
  if (c.modulus) j["modulus"] = *c.modulus;
  j["format"] = c.format;
  j["threads"] = c.threads;
  j["cross_check"] = c.cross_check;
  return j;
}

// Everything derived from the configuration before any verification runs.
struct Prepared {
  FieldPtr ctx;
  std::optional<PlaneCurve> curve;
  std::optional<HurwitzParams> params;
};

Prepared Prepare(const RunConfig& c) {
  auto invalid = [](const std::string& why) {
    throw Error(ErrorKind::kInvalidParams, why);
  };
  if (!kCommands.count(c.command)) invalid("unknown command '" + c.command + "'");
  if (!kFormats.count(c.format)) invalid("unknown format '" + c.format + "'");
  if (c.threads == 0) invalid("threads must be at least 1");
  if (!c.q) invalid("--q is required");
  const auto pm = PrimePowerDecompose(*c.q);
  if (!pm) invalid(std::to_string(*c.q) + " is not a prime power");
  if (c.p && *c.p != pm->first) invalid("--p does not match q");
  if (c.m && *c.m != pm->second) invalid("--m does not match q");

  Prepared prep;
  if (c.command == "count" || c.command == "maximal") {
    if (!kCurves.count(c.curve)) invalid("--curve must be one of hermitian, hurwitz, fermat, weierstrass, line");
    if (c.curve == "hermitian") {
      prep.curve = Hermitian(*c.q);
    } else if (c.curve == "hurwitz") {
      if (!c.n) invalid("--n is required for hurwitz");
      prep.params = HurwitzParams::Make(*c.n, *c.q);
      prep.curve = Hurwitz(*prep.params);
    } else if (c.curve == "fermat") {
      if (!c.d) invalid("--d is required for fermat");
      prep.curve = Fermat(*c.d, *c.q);
    } else if (c.curve == "weierstrass") {
      prep.curve = WeierstrassModel(*c.q);
    } else {
      prep.curve = LineL();
    }
  } else if (c.command == "subgroup") {
    if (c.n && *c.n != 2) invalid("subgroup works on H_2 only");
    prep.params = HurwitzParams::Make(2, *c.q);
    WeierstrassModel(*c.q);
  } else {
    if (!c.n) invalid("--n is required for " + c.command);
    prep.params = HurwitzParams::Make(*c.n, *c.q);
  }

  std::optional<std::vector<uint32_t>> modulus;
  if (c.modulus) modulus = ParsePolynomial(*c.modulus, pm->first);
  prep.ctx = FieldCtx::Make(pm->first, pm->second, modulus);
  return prep;
}

class Runner {
 public:
  Runner(const RunConfig& config, Prepared prep)
      : config_(config), prep_(std::move(prep)) {}

  RunResult Execute();

 private:
  using StepFn = std::function<Json()>;

  // Runs a step whose returned object carries "status".
  void Step(const std::string& name, const StepFn& fn);

  Json CountStep();
  Json MaximalStep();
  Json SplitCountStep(const SplitSet& s);
  Json CaseAnalysisStep();
  Json ClosureStep(const SplitSet& s);
  Json IndexStep(const SplitSet& s);
  Json TorsionStep();
  Json TheoremStep(const SplitSet& s);
  Json CorollaryStep(const SplitSet& s);
  Json NegativeControlsStep(const SplitSet& s);

  const EllipticGroup& Group() {
    if (!group_) group_.emplace(prep_.ctx);
    return *group_;
  }
  bool IsEllipticCase() const {
    return prep_.params->n == 2 && prep_.ctx->p() != 2 && prep_.ctx->p() != 3;
  }
  std::vector<EllPoint> PhiOf(const SplitSet& s) {
    std::vector<EllPoint> out;
    for (const auto& pt : s.points) out.push_back(Group().Phi(pt));
    std::sort(out.begin(), out.end());
    return out;
  }

  const RunConfig& config_;
  Prepared prep_;
  std::optional<EllipticGroup> group_;
  std::optional<uint64_t> fermat_count_;
  Json results_ = Json::object();
  Json failures_ = Json::array();
  Json timings_ = Json::object();
};

void Runner::Step(const std::string& name, const StepFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  Json out = fn();
  const auto end = std::chrono::steady_clock::now();
  if (out.value("status", "") == "fail") failures_.push_back(name);
  results_[name] = std::move(out);
  if (config_.timings) {
    timings_[name] =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  }
}

Json Status(bool ok) { return ok ? "pass" : "fail"; }

Json Runner::CountStep() {
  const auto pts = EnumeratePoints(*prep_.curve, *prep_.ctx, config_.threads);
  Json j;
  j["status"] = "info";
  j["curve"] = prep_.curve->label();
  j["polynomial"] = prep_.curve->poly().ToString();
  j["q"] = prep_.ctx->q();
  j["count"] = pts.size();
  return j;
}

Json Runner::MaximalStep() {
  Json j = ToJson(IsMaximal(*prep_.curve, *prep_.ctx, config_.threads));
  j["status"] = Status(j["maximal"].get<bool>());
  return j;
}

Json Runner::SplitCountStep(const SplitSet& s) {
  const SplitCountReport r = VerifySplitCounts(s.params, *prep_.ctx);
  Json j;
  j["status"] = Status(r.ok());
  j.update(ToJson(r));
  return j;
}

Json Runner::CaseAnalysisStep() {
  const CaseAnalysisReport r = VerifyCaseAnalysis(*prep_.params, *prep_.ctx);
  Json j;
  j["status"] = r.applicable ? Status(r.matches) : Json("skipped");
  j.update(ToJson(r));
  return j;
}

Json Runner::ClosureStep(const SplitSet& s) {
  Json j;
  if (!IsEllipticCase()) {
    j["status"] = "skipped";
    j["note"] = "elliptic model needs n = 2 and characteristic other than 2, 3";
    return j;
  }
  const EllipticGroup& g = Group();
  const auto image = PhiOf(s);
  const Subgroup closure = g.Closure(image);
  const bool closed = closure.elements == image;

  std::vector<EllPoint> locus;
  for (const auto& pt : g.Points()) {
    if (g.InResidueLocus(pt)) locus.push_back(pt);
  }
  const bool locus_matches = locus == image;

  uint64_t chord_checked = 0, chord_failed = 0;
  uint64_t subst_checked = 0, subst_failed = 0;
  uint64_t sums_outside = 0;
  for (const auto& a : image) {
    for (const auto& b : image) {
      if (const auto ok = ChordIdentityHolds(g, a, b)) {
        ++chord_checked;
        chord_failed += !*ok;
      }
      if (const auto ok = SubstitutionIdentityHolds(g, a, b)) {
        ++subst_checked;
        subst_failed += !*ok;
      }
      sums_outside += !g.InResidueLocus(g.Add(a, b));
    }
  }
  uint64_t dbl_checked = 0, dbl_failed = 0;
  for (const auto& a : image) {
    if (const auto ok = DoublingIdentityHolds(g, a)) {
      ++dbl_checked;
      dbl_failed += !*ok;
    }
  }
  j["status"] = Status(closed && locus_matches && chord_failed == 0 &&
                       subst_failed == 0 && dbl_failed == 0 &&
                       sums_outside == 0);
  j["phi_s_size"] = image.size();
  j["closure"] = ToJson(closure);
  j["closure_equals_phi_s"] = closed;
  j["residue_locus_equals_phi_s"] = locus_matches;
  j["chord_identity"] = {{"checked", chord_checked}, {"failed", chord_failed}};
  j["substitution_identity"] = {{"checked", subst_checked},
                                {"failed", subst_failed}};
  j["doubling_identity"] = {{"checked", dbl_checked}, {"failed", dbl_failed}};
  j["sums_outside_phi_s"] = sums_outside;
  return j;
}

Json Runner::IndexStep(const SplitSet& s) {
  Json j;
  if (!IsEllipticCase()) {
    j["status"] = "skipped";
    j["note"] = "index computed on the elliptic model only";
    return j;
  }
  const EllipticGroup& g = Group();
  const uint64_t q = prep_.ctx->q();
  const uint64_t index = g.IndexDS(PhiOf(s));
  j["status"] = Status(index == s.params.d && (q + 1) * (q + 1) % index == 0);
  j["group_order"] = g.Points().size();
  j["subgroup_order"] = g.Points().size() / index;
  j["d_s"] = index;
  j["divides_q_plus_1_squared"] = (q + 1) * (q + 1) % index == 0;
  return j;
}

Json Runner::TorsionStep() {
  Json j;
  if (!IsEllipticCase()) {
    j["status"] = "skipped";
    j["note"] = "torsion check runs on the genus 1 model only";
    return j;
  }
  const TorsionReport r = Group().CheckTorsion();
  j["status"] = Status(r.ok());
  j.update(ToJson(r));
  return j;
}

Json Runner::TheoremStep(const SplitSet& s) {
  const CoveringReport r =
      VerifyTheoremInstance(s, *prep_.ctx, config_.cross_check, config_.threads);
  fermat_count_ = r.fermat_count;
  Json j;
  j["status"] = Status(r.TheoremOk());
  j.update(ToJson(r));
  return j;
}

Json Runner::CorollaryStep(const SplitSet& s) {
  const CorollaryReport r = VerifyCorollaryInstance(s);
  Json j;
  // Whether the genus hypothesis holds is an outcome, not a requirement.
  j["status"] = r.g_prime_matches_fermat ? "info" : "fail";
  j.update(ToJson(r));
  return j;
}

Json Runner::NegativeControlsStep(const SplitSet& s) {
  const HurwitzParams& params = s.params;
  const FieldCtx& ctx = *prep_.ctx;
  Json j;
  bool all_rejected = true;

  // Fundamental points alone cannot satisfy the counting identity.
  {
    const SplitSet truncated =
        SplitSet::FromPoints(params, FundamentalPoints(ctx));
    const uint64_t fermat =
        fermat_count_ ? *fermat_count_
                      : EnumeratePoints(Fermat(params.d, params.q), ctx).size();
    const bool identity = params.d * truncated.points.size() == fermat;
    j["truncated_s"] = {{"s_count", truncated.points.size()},
                        {"fermat_count", fermat},
                        {"count_identity", identity}};
    all_rejected &= !identity;
  }

  // A Fermat curve whose degree does not divide q + 1 is not maximal.
  {
    uint32_t e = params.d + 1;
    while ((params.q + 1) % e == 0 || e % ctx.p() == 0) ++e;
    const CountReport r = IsMaximal(Fermat(e, params.q), ctx, config_.threads);
    j["non_dividing_fermat"] = ToJson(r);
    all_rejected &= !r.maximal;
  }

  // One extra generator outside phi(S) enlarges the subgroup.
  if (IsEllipticCase()) {
    const EllipticGroup& g = Group();
    auto gens = PhiOf(s);
    const auto outside = std::find_if(
        g.Points().begin(), g.Points().end(),
        [&](const EllPoint& pt) { return !std::binary_search(gens.begin(), gens.end(), pt); });
    if (outside != g.Points().end()) {
      gens.push_back(*outside);
      const uint64_t index = g.IndexDS(gens);
      j["enlarged_generators"] = {{"extra", ToJson(outside->point())},
                                  {"d_s", index}};
      all_rejected &= index != params.d;
    }
  }
  j["status"] = Status(all_rejected);
  return j;
}

RunResult Runner::Execute() {
  const std::string& cmd = config_.command;
  if (cmd == "count") {
    Step("count", [&] { return CountStep(); });
  } else if (cmd == "maximal") {
    Step("maximal", [&] { return MaximalStep(); });
  } else {
    const SplitSet s = BuildS(*prep_.params, *prep_.ctx);
    if (cmd == "build-s") {
      Step("split_set", [&] {
        Json j = ToJson(s);
        j["status"] = "info";
        return j;
      });
      Step("split_counts", [&] { return SplitCountStep(s); });
      Step("case_analysis", [&] { return CaseAnalysisStep(); });
    } else if (cmd == "subgroup") {
      Step("closure", [&] { return ClosureStep(s); });
      Step("index", [&] { return IndexStep(s); });
      Step("torsion", [&] { return TorsionStep(); });
    } else if (cmd == "covering") {
      Step("theorem", [&] { return TheoremStep(s); });
    } else {
      Step("split_counts", [&] { return SplitCountStep(s); });
      Step("case_analysis", [&] { return CaseAnalysisStep(); });
      Step("closure", [&] { return ClosureStep(s); });
      Step("index", [&] { return IndexStep(s); });
      Step("torsion", [&] { return TorsionStep(); });
      Step("theorem", [&] { return TheoremStep(s); });
      Step("corollary", [&] { return CorollaryStep(s); });
      Step("negative_controls", [&] { return NegativeControlsStep(s); });
    }
  }

  Json report;
  report["config"] = ConfigJson(config_);
  report["field"] = FieldJson(*prep_.ctx);
  report["results"] = results_;
  report["failures"] = failures_;
  report["timings"] = timings_;

  RunResult out;
  out.exit_code = failures_.empty() ? kExitOk : kExitFailed;
  if (config_.format == "json") {
    out.report = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    const bool csv = config_.format == "csv";
    if (csv) {
      os << "step,status,key,value\n";
    } else {
      os << "maxcurve " << cmd << " over F_" << prep_.ctx->order() << " = F_"
         << prep_.ctx->p() << "[x]/(" << prep_.ctx->ModulusString() << "), q = "
         << prep_.ctx->q() << "\n";
    }
    for (const auto& [name, step] : results_.items()) {
      const std::string status = step.value("status", "info");
      if (!csv) os << "[" << status << "] " << name << "\n";
      for (const auto& [key, value] : step.items()) {
        if (key == "status" || value.is_structured()) continue;
        const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
        if (csv) {
          os << name << "," << status << "," << key << "," << v << "\n";
        } else {
          os << "    " << key << " = " << v << "\n";
        }
      }
    }
    if (!csv) {
      os << (failures_.empty() ? "all checks passed" : "failures: " + failures_.dump())
         << "\n";
    }
    out.report = os.str();
  }
  return out;
}

}  // namespace

RunResult Run(const RunConfig& config) {
  Prepared prep;
  try {
    prep = Prepare(config);
  } catch (const Error& e) {
    Json report;
    report["config"] = ConfigJson(config);
    report["error"] = {{"kind", std::string(ErrorKindName(e.kind()))},
                       {"message", e.what()}};
    return {kExitInvalidParams, report.dump(2) + "\n"};
  }
  return Runner(config, std::move(prep)).Execute();
}

}  // namespace maxcurve
