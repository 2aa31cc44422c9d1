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

#ifndef MAXCURVE_REPORT_H_
#define MAXCURVE_REPORT_H_

#include <vector>

#include "json.hpp"
#include "maxcurve/coverings.h"
#include "maxcurve/ellgroup.h"
#include "maxcurve/ffield.h"
#include "maxcurve/plane.h"
#include "maxcurve/special_set.h"

namespace maxcurve {

// Insertion-ordered so that serialized reports are reproducible byte for byte.
using Json = nlohmann::ordered_json;

Json ToJson(const Element& x);
// [[x coeffs], [y coeffs], [z coeffs]]
Json ToJson(const ProjectivePoint& pt);
Json ToJson(const std::vector<ProjectivePoint>& pts);
Json FieldJson(const FieldCtx& ctx);
Json ToJson(const CountReport& r);
Json ToJson(const SplitSet& s);
Json ToJson(const SplitCountReport& r);
Json ToJson(const CaseAnalysisReport& r);
Json ToJson(const Subgroup& s);
Json ToJson(const TorsionReport& r);
Json ToJson(const CoveringReport& r);
Json ToJson(const CorollaryReport& r);

}  // namespace maxcurve

#endif  // MAXCURVE_REPORT_H_
