#include "lsa/report.hpp"

namespace lsa::report {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return to_json(*v);
}

Json maps_json(const std::vector<GradedLinearMap>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) out.push_back(to_json(m.matrix));
  return out;
}

}  // namespace

Json to_json(SuperDim d) { return Json::array({d.even, d.odd}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const LieSuperalgebra& L, const ValidationReport& r) {
  Json j;
  j["algebra"] = L.name();
  j["sdim"] = to_json(L.sdim());
  j["valid"] = r.ok();
  Json laws = Json::array();
  for (const auto& c : r.checks) {
    Json law;
    law["law"] = c.law;
    law["passed"] = c.passed;
    if (!c.passed) {
      Json witness = Json::array();
      for (auto i : c.witness) witness.push_back(L.basis_name(i));
      law["witness"] = witness;
      law["detail"] = c.detail;
    }
    laws.push_back(std::move(law));
  }
  j["laws"] = std::move(laws);
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["algebra"] = r.name;
  j["sdim"] = to_json(r.sdim);
  j["sdim_derived"] = to_json(r.sdim_derived);
  j["sdim_center"] = to_json(r.sdim_center);
  j["sdim_mod_center"] = to_json(r.sdim_mod_center);
  Json series = Json::array();
  for (auto d : r.central_series) series.push_back(to_json(d));
  j["central_series"] = std::move(series);
  if (r.nilpotency_class)
    j["nilpotency_class"] = *r.nilpotency_class;
  else
    j["nilpotency_class"] = "not nilpotent";
  j["is_stem"] = r.is_stem;
  j["generator_pair"] = optional_json(r.generator_pair);
  j["lambda"] = optional_json(r.lambda);
  j["st"] = optional_json(r.st);
  j["t"] = r.t_scalar ? Json(*r.t_scalar) : Json(nullptr);
  return j;
}

Json to_json(const SchurBoundReport& r) {
  Json j;
  j["sdim_mod_center"] = to_json(r.sdim_mod_center);
  j["generator_pair"] = to_json(r.generator_pair);
  j["sdim_derived"] = to_json(r.sdim_derived);
  j["lambda"] = to_json(r.lambda);
  j["schur_bound_holds"] = r.holds;
  return j;
}

Json to_json(const IdStarBoundReport& r) {
  Json j;
  j["sdim_ad"] = to_json(r.sdim_ad);
  j["sdim_id_star"] = to_json(r.sdim_id_star);
  j["sdim_id"] = to_json(r.sdim_id);
  j["sdim_der"] = to_json(r.sdim_der);
  j["lambda"] = to_json(r.lambda);
  j["chain_holds"] = r.chain_holds;
  j["idstar_bound_holds"] = r.bound_holds;
  return j;
}

Json to_json(const PropositionAudit& r) {
  Json j;
  j["derived_dim"] = r.derived_dim;
  j["st"] = to_json(r.st);
  j["t"] = r.t;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step;
    step["if_derived_dim_at_least"] = s.min_derived_dim;
    step["then_t_at_least"] = s.min_t;
    step["applies"] = s.applies;
    step["holds"] = s.holds;
    steps.push_back(std::move(step));
  }
  j["ladder"] = std::move(steps);
  j["holds"] = r.ok();
  return j;
}

Json to_json(const DerivationSpace& d) {
  Json j;
  j["sdim"] = to_json(d.sdim());
  j["even_basis"] = maps_json(d.even_basis);
  j["odd_basis"] = maps_json(d.odd_basis);
  return j;
}

Json to_json(const catalog::Table1Report& r) {
  Json j;
  j["all_match"] = r.ok();
  Json rows = Json::array();
  for (const auto& res : r.results) {
    Json row;
    row["name"] = res.name;
    row["stored"] = Json::array(
        {to_json(res.stored.sdim_mod_center), to_json(res.stored.generator_pair), to_json(res.stored.sdim_derived)});
    row["computed"] = Json::array({to_json(res.computed.sdim_mod_center), to_json(res.computed.generator_pair),
                                   to_json(res.computed.sdim_derived)});
    row["match"] = res.matches;
    if (!res.error.empty()) row["error"] = res.error;
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const catalog::ClassificationReport& r) {
  Json j;
  j["all_hold"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json check;
    check["algebra"] = c.subject;
    check["listed"] = c.listed;
    if (c.listed) check["expected_st"] = to_json(c.expected);
    check["st"] = to_json(c.computed);
    check["passed"] = c.passed;
    if (!c.note.empty()) check["note"] = c.note;
    checks.push_back(std::move(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const std::vector<ClassifiedInstance>& instances) {
  Json out = Json::array();
  for (const auto& inst : instances) {
    Json j;
    j["algebra"] = inst.algebra.name();
    j["family"] = inst.family;
    j["base"] = inst.base;
    j["padding"] = to_json(inst.padding);
    j["sdim"] = to_json(inst.algebra.sdim());
    out.push_back(std::move(j));
  }
  return out;
}

Json bounds_json(const LieSuperalgebra& L, const SchurBoundReport& schur, const IdStarBoundReport& idstar,
                 const PropositionAudit& audit) {
  Json j;
  j["algebra"] = L.name();
  j["schur"] = to_json(schur);
  j["idstar"] = to_json(idstar);
  j["ladder"] = to_json(audit);
  j["all_hold"] = schur.holds && idstar.chain_holds && idstar.bound_holds && audit.ok();
  return j;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lsa::report
