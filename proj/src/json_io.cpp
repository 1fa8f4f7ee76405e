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

#include "pnspace/json_io.hpp"

#include <stdexcept>

namespace pnspace {

using nlohmann::json;

json df_to_json(const DistributionFunction& f) {
  json knots = json::array();
  for (const Knot& k : f.knots()) {
    knots.push_back({k.x, k.y});
  }
  return {{"knots", std::move(knots)}, {"value_at_inf", f.left_limit_at_inf()}};
}

DistributionFunction df_from_json(const json& j) {
  std::vector<Knot> knots;
  for (const auto& pair : j.at("knots")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("distribution function: knots must be [x, y] pairs");
    }
    knots.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return DistributionFunction(std::move(knots), j.at("value_at_inf").get<double>());
}

json grid_to_json(const GridSpec& grid) {
  return {{"mesh", grid.mesh}, {"x_max", grid.x_max}, {"tol_eq", grid.tol_eq}};
}

namespace {

json tail_to_json(const MonotonePwl& f) {
  switch (f.tail()) {
    case MonotonePwl::Tail::Slope:
      return {{"slope", f.tail_param()}};
    case MonotonePwl::Tail::JumpToInf:
      return {{"jump_at", f.tail_param()}};
    case MonotonePwl::Tail::Constant:
      return "constant";
  }
  return nullptr;
}

json knots_to_json(const std::vector<Knot>& ks) {
  json out = json::array();
  for (const Knot& k : ks) out.push_back({k.x, k.y});
  return out;
}

}  // namespace

json pwl_to_json(const MonotonePwl& f) {
  return {{"knots", knots_to_json(f.knots())}, {"tail", tail_to_json(f)}};
}

json phi_to_json(const PhiTransform& phi) {
  const MonotonePwl& fn = phi.phi_fn();
  return {{"phi_knots", knots_to_json(fn.knots())},
          {"tail", tail_to_json(fn)},
          {"bijective", phi.bijective()},
          {"bounded_domain", phi.bounded_domain()}};
}

PhiTransform phi_from_json(const json& j, const GridSpec& grid) {
  if (j.is_string() && j.get<std::string>() == "identity") {
    return PhiTransform::identity();
  }
  std::vector<Knot> knots;
  for (const auto& pair : j.at("phi_knots")) {
    knots.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
  }
  const json& tail = j.at("tail");
  MonotonePwl::Tail kind = MonotonePwl::Tail::Constant;
  double param = 0.0;
  if (tail.is_object() && tail.contains("slope")) {
    kind = MonotonePwl::Tail::Slope;
    param = tail.at("slope").get<double>();
  } else if (tail.is_object() && tail.contains("jump_at")) {
    kind = MonotonePwl::Tail::JumpToInf;
    param = tail.at("jump_at").get<double>();
  } else {
    throw std::invalid_argument("phi: tail must declare {\"slope\": s} or {\"jump_at\": b}");
  }
  return PhiTransform::validate(MonotonePwl(std::move(knots), kind, param), grid);
}

TriangleFunction triangle_from_name(const std::string& name) {
  if (name == "tauM") return TriangleFunction::tau_m();
  if (name == "tauT:pi") return TriangleFunction::tau_t(TNorm::product());
  if (name == "tauT:M") return TriangleFunction::tau_t(TNorm::minimum());
  if (name == "tauTstar:max") return TriangleFunction::tau_tstar(TConorm::maximum());
  if (name == "tauTstar:pisum") {
    return TriangleFunction::tau_tstar(TConorm::probabilistic_sum());
  }
  throw std::invalid_argument("unknown triangle function: " + name);
}

json space_to_json(const PNSpace& space) {
  json norm = {{"id", space.norm.id()}};
  if (space.norm.kind() == NormFamily::Kind::Ex22) {
    norm["params"] = {{"a", space.norm.param_a()}};
  }
  json out = {{"dim", space.dim},
              {"norm", std::move(norm)},
              {"tau", space.tau.name()},
              {"tau_star", space.tau_star.name()}};
  if (space.phi.has_value()) {
    out["phi"] = phi_to_json(*space.phi);
  }
  return out;
}

PNSpace space_from_json(const json& j, const GridSpec& grid) {
  PNSpace space;
  space.dim = j.at("dim").get<std::size_t>();
  if (space.dim < 1 || space.dim > 8) {
    throw std::invalid_argument("space: dim must be in [1, 8]");
  }

  const json& norm = j.at("norm");
  const std::string id = norm.at("id").get<std::string>();
  if (id == "ex22") {
    space.norm = NormFamily::ex22(norm.at("params").at("a").get<double>());
  } else if (id == "ex25") {
    space.norm = NormFamily::ex25();
  } else if (id == "simple") {
    space.norm = NormFamily::simple();
  } else {
    throw std::invalid_argument("unknown norm family: " + id);
  }

  space.tau = triangle_from_name(j.at("tau").get<std::string>());
  space.tau_star = triangle_from_name(j.at("tau_star").get<std::string>());
  if (j.contains("phi")) {
    space.phi = phi_from_json(j.at("phi"), grid);
  }
  return space;
}

json vector_to_json(const Vector& v) {
  json out = {{"coords", v.coords}};
  if (v.rational.has_value()) out["rational"] = *v.rational;
  return out;
}

json set_to_json(const PointSet& set) {
  switch (set.kind()) {
    case PointSet::Kind::Parametric:
      if (set.family() == PointSet::Family::Naturals) {
        return {{"kind", "parametric"}, {"family", "naturals"}};
      }
      return {{"kind", "parametric"},
              {"family", "interval_q"},
              {"a", set.interval_a()},
              {"b", set.interval_b()}};
    case PointSet::Kind::Explicit:
    case PointSet::Kind::Sampled: {
      json pts = json::array();
      json rational = json::array();
      bool any_flag = false;
      for (const Vector& p : set.points()) {
        pts.push_back(p.coords);
        rational.push_back(p.rational.value_or(false));
        any_flag = any_flag || p.rational.has_value();
      }
      json out = {{"kind", set.kind() == PointSet::Kind::Explicit ? "explicit" : "sampled"},
                  {"points", std::move(pts)}};
      if (any_flag) out["rational"] = std::move(rational);
      if (set.kind() == PointSet::Kind::Sampled) out["description"] = set.description();
      return out;
    }
  }
  return nullptr;
}

PointSet point_set_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "parametric") {
    const std::string family = j.at("family").get<std::string>();
    if (family == "naturals") return PointSet::naturals();
    if (family == "interval_q") {
      return PointSet::interval_rationals(j.at("a").get<double>(), j.at("b").get<double>());
    }
    throw std::invalid_argument("unknown parametric family: " + family);
  }
  if (kind != "explicit" && kind != "sampled") {
    throw std::invalid_argument("unknown set kind: " + kind);
  }
  std::vector<Vector> pts;
  const json& arr = j.at("points");
  const json* rational = j.contains("rational") ? &j.at("rational") : nullptr;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::optional<bool> flag;
    if (rational != nullptr && i < rational->size()) flag = (*rational)[i].get<bool>();
    pts.push_back(Vector(arr[i].get<std::vector<double>>(), flag));
  }
  if (kind == "sampled") {
    return PointSet::sampled(std::move(pts), j.value("description", std::string("sampled set")));
  }
  return PointSet::explicit_set(std::move(pts));
}

namespace {

const char* status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass:
      return "pass";
    case AxiomStatus::Fail:
      return "fail";
    case AxiomStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

json witness_to_json(const AxiomWitness& w) {
  json out = json::object();
  if (w.p.has_value()) out["p"] = w.p->coords;
  if (w.q.has_value()) out["q"] = w.q->coords;
  if (w.alpha.has_value()) out["alpha"] = *w.alpha;
  if (w.x.has_value()) out["x"] = *w.x;
  return out;
}

json check_to_json(const AxiomCheck& c) {
  json out = {{"axiom", c.axiom},
              {"status", status_name(c.status)},
              {"worst_violation", c.worst_violation}};
  const json w = witness_to_json(c.witness);
  if (!w.empty()) out["witness"] = w;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

}  // namespace

json report_to_json(const SpaceAxiomReport& r) {
  return {{"n1_forward", check_to_json(r.n1_forward)},
          {"n1_reverse", check_to_json(r.n1_reverse)},
          {"n2", check_to_json(r.n2)},
          {"n3", check_to_json(r.n3)},
          {"n4", check_to_json(r.n4)},
          {"all_pass", r.all_pass()}};
}

json report_to_json(const IdentityCheckReport& r) {
  return {{"pass", r.pass},
          {"max_residual", r.max_residual},
          {"triples_checked", r.triples_checked},
          {"worst", witness_to_json(r.worst)}};
}

json report_to_json(const CharacteristicReport& r) {
  json out = {{"characteristic", r.characteristic}};
  if (r.witness.has_value()) {
    out["witness"] = r.witness->coords;
    out["witness_limit"] = r.witness_limit;
  }
  return out;
}

json report_to_json(const TriangleAxiomReport& r) {
  auto law = [](const TriangleLawResult& l) {
    return json{{"law", l.law},
                {"pass", l.pass},
                {"worst_violation", l.worst_violation},
                {"witness_sample", l.witness_sample}};
  };
  return {{"associativity", law(r.associativity)},
          {"commutativity", law(r.commutativity)},
          {"monotonicity", law(r.monotonicity)},
          {"unit", law(r.unit)},
          {"tolerance", r.tolerance},
          {"all_pass", r.all_pass()}};
}

json report_to_json(const RadiusReport& r) {
  json out = {{"class", to_string(r.cls)},
              {"d_bounded", r.d_bounded},
              {"left_limit", r.left_limit},
              {"exactness", r.exactness},
              {"radius", df_to_json(r.radius)},
              {"grid", grid_to_json(r.grid)}};
  if (r.witness_x0.has_value()) out["witness_x0"] = *r.witness_x0;
  if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
  return out;
}

json report_to_json(const ConvergenceReport& r) {
  json per = json::array();
  for (const LambdaTailIndex& t : r.per_lambda) {
    per.push_back({{"lambda", t.lambda}, {"attained", t.attained}, {"tail_index", t.tail_index}});
  }
  return {{"verdict", r.verdict}, {"per_lambda", std::move(per)}, {"basis", r.basis}};
}

json report_to_json(const std::vector<AbsorptionRow>& rows) {
  json out = json::array();
  for (const AbsorptionRow& row : rows) {
    json r = {{"n", row.n}, {"absorbed", row.absorbed}};
    if (row.absorbed) r["k"] = row.k;
    if (row.unabsorbed.has_value()) r["unabsorbed"] = row.unabsorbed->coords;
    out.push_back(std::move(r));
  }
  return out;
}

json report_to_json(const Lemma112Report& r) {
  json out = {{"hypothesis_met", r.hypothesis_met}, {"detail", r.detail}};
  if (r.hypothesis_met) {
    out["absorption_bounded"] = r.absorption_bounded;
    out["radius_bounded"] = r.radius_bounded;
    out["topologically_bounded"] = r.topologically_bounded;
    out["consistent"] = r.consistent;
  } else if (r.hypothesis_witness.has_value()) {
    out["witness"] = r.hypothesis_witness->coords;
  }
  return out;
}

json report_to_json(const Theorem21Report& r) {
  const char* route = r.route == Theorem21Report::Route::Characteristic ? "characteristic"
                      : r.route == Theorem21Report::Route::CounterBehavior
                          ? "counter-behavior"
                          : "precondition-failed";
  return {{"route", route},
          {"convergent", r.convergent},
          {"d_bounded", r.d_bounded},
          {"consistent", r.consistent},
          {"detail", r.detail}};
}

json report_to_json(const CompactnessProbeReport& r) {
  json out = {{"counterexample_found", r.counterexample_found},
              {"d_bounded", r.d_bounded},
              {"non_closedness_certified", r.non_closedness_certified},
              {"compactness_impossible", r.compactness_impossible},
              {"detail", r.detail},
              {"basis", r.basis}};
  if (r.witness_sequence.has_value()) out["witness_sequence"] = *r.witness_sequence;
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  return out;
}

json report_to_json(const ProbeVerdict& r) {
  json out = {{"counterexample_found", r.counterexample_found},
              {"detail", r.detail},
              {"basis", r.basis}};
  if (r.witness_pairing.has_value()) out["witness_pairing"] = *r.witness_pairing;
  return out;
}

}  // namespace pnspace
