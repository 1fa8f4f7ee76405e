// Copyright 2026 The pnspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PNSPACE_JSON_IO_HPP
#define PNSPACE_JSON_IO_HPP

#include <json.hpp>

#include "pnspace/analysis.hpp"
#include "pnspace/phi.hpp"
#include "pnspace/pn_space.hpp"
#include "pnspace/point_set.hpp"

namespace pnspace {

// Wire formats. Parsers throw std::invalid_argument (or nlohmann::json
// exceptions) on malformed input; the CLI maps those to exit code 2.

nlohmann::json df_to_json(const DistributionFunction& f);
DistributionFunction df_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const GridSpec& grid);

nlohmann::json pwl_to_json(const MonotonePwl& f);

/// {"phi_knots": [[x,y],...], "tail": {"slope": s} | {"jump_at": b}}
nlohmann::json phi_to_json(const PhiTransform& phi);
PhiTransform phi_from_json(const nlohmann::json& j, const GridSpec& grid = GridSpec());

/// "tauM" | "tauT:pi" | "tauT:M" | "tauTstar:max" | "tauTstar:pisum"
TriangleFunction triangle_from_name(const std::string& name);

/// {"dim": n, "norm": {"id": ..., "params": {...}}, "tau": ..., "tau_star": ...,
///  "phi": "identity" | {...}}  (phi optional)
nlohmann::json space_to_json(const PNSpace& space);
PNSpace space_from_json(const nlohmann::json& j, const GridSpec& grid = GridSpec());

/// {"kind": "explicit" | "sampled", "points": [[...],...], "rational": [...],
///  "description": ...} or {"kind": "parametric", "family": "interval_q" |
///  "naturals", "a": ..., "b": ...}
nlohmann::json set_to_json(const PointSet& set);
PointSet point_set_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);

nlohmann::json report_to_json(const SpaceAxiomReport& r);
nlohmann::json report_to_json(const IdentityCheckReport& r);
nlohmann::json report_to_json(const CharacteristicReport& r);
nlohmann::json report_to_json(const TriangleAxiomReport& r);
nlohmann::json report_to_json(const RadiusReport& r);
nlohmann::json report_to_json(const ConvergenceReport& r);
nlohmann::json report_to_json(const std::vector<AbsorptionRow>& rows);
nlohmann::json report_to_json(const Lemma112Report& r);
nlohmann::json report_to_json(const Theorem21Report& r);
nlohmann::json report_to_json(const CompactnessProbeReport& r);
nlohmann::json report_to_json(const ProbeVerdict& r);

}  // namespace pnspace

#endif  // PNSPACE_JSON_IO_HPP
