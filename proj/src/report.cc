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

#include "maxcurve/report.h"

namespace maxcurve {
namespace {

Json Histogram(const std::map<uint64_t, uint64_t>& h) {
  Json out = Json::object();
  for (const auto& [size, count] : h) out[std::to_string(size)] = count;
  return out;
}

Json Triples(const std::vector<CoordTriple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back({t.a, t.c, t.b});
  return out;
}

}  // namespace

Json ToJson(const Element& x) { return Json(x.Coeffs()); }

Json ToJson(const ProjectivePoint& pt) {
  return Json::array({ToJson(pt.x()), ToJson(pt.y()), ToJson(pt.z())});
}

Json ToJson(const std::vector<ProjectivePoint>& pts) {
  Json out = Json::array();
  for (const auto& pt : pts) out.push_back(ToJson(pt));
  return out;
}

Json FieldJson(const FieldCtx& ctx) {
  Json j;
  j["p"] = ctx.p();
  j["m"] = ctx.m();
  j["q"] = ctx.q();
  j["order"] = ctx.order();
  j["modulus"] = ctx.ModulusString();
  j["modulus_coeffs"] = ctx.modulus();
  return j;
}

Json ToJson(const CountReport& r) {
  Json j;
  j["curve"] = r.label;
  j["q"] = r.q;
  j["genus"] = r.genus;
  j["count"] = r.count;
  j["weil_upper"] = r.weil_upper;
  j["maximal"] = r.maximal;
  return j;
}

Json ToJson(const SplitSet& s) {
  Json j;
  j["n"] = s.params.n;
  j["d"] = s.params.d;
  j["q"] = s.params.q;
  j["size"] = s.points.size();
  j["affine_count"] = s.affine_count;
  j["t"] = s.t;
  j["points"] = ToJson(s.points);
  return j;
}

Json ToJson(const SplitCountReport& r) {
  Json j;
  j["s_count"] = r.s_count;
  j["s_expected"] = r.s_expected;
  j["t"] = r.t;
  j["t_expected"] = r.t_expected;
  j["t_closed_form"] = r.t_closed_form;
  j["closed_form_applies"] = r.closed_form_applies;
  j["affine_is_d_times_t"] = r.affine_is_d_times_t;
  return j;
}

Json ToJson(const CaseAnalysisReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.applicable) {
    j["found"] = Triples(r.found);
    j["expected"] = Triples(r.expected);
    j["matches"] = r.matches;
  }
  return j;
}

Json ToJson(const Subgroup& s) {
  Json j;
  j["order"] = s.order;
  Json gens = Json::array();
  for (const auto& g : s.generators) gens.push_back(ToJson(g.point()));
  j["generators"] = gens;
  return j;
}

Json ToJson(const TorsionReport& r) {
  Json j;
  j["order"] = r.order;
  j["expected_order"] = r.expected_order;
  j["not_killed"] = r.not_killed;
  return j;
}

Json ToJson(const CoveringReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["unramified"] = r.unramified;
  j["s_count"] = r.s_count;
  j["split_points"] = r.split_points;
  j["fiber_histogram"] = Histogram(r.fiber_histogram);
  if (r.cross_check_agrees) j["cross_check_agrees"] = *r.cross_check_agrees;
  if (r.fermat_count > 0) {
    j["fermat_count"] = r.fermat_count;
    j["hurwitz_count"] = r.hurwitz_count;
    j["full_fiber_histogram"] = Histogram(r.full_fiber_histogram);
    j["hypothesis_i"] = r.hypothesis_i;
    j["hypothesis_ii"] = r.hypothesis_ii;
    j["count_identity"] = r.count_identity;
    j["rh_identity"] = r.rh_identity;
    j["fermat_maximal"] = r.fermat_maximal;
    j["hurwitz_maximal"] = r.hurwitz_maximal;
  }
  return j;
}

Json ToJson(const CorollaryReport& r) {
  Json j;
  j["g"] = r.g;
  j["d_s"] = r.d_s;
  j["bound"] = r.bound.ToString();
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["g_prime"] = r.g_prime;
  j["lemma_threshold"] = r.lemma_threshold;
  j["g_prime_exceeds_lemma"] = r.g_prime_exceeds_lemma;
  j["fermat_genus"] = r.fermat_genus;
  j["g_prime_matches_fermat"] = r.g_prime_matches_fermat;
  return j;
}

}  // namespace maxcurve
