#include "clt/serialize.hpp"

namespace clt {

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

void to_json(json& j, const Polynomial& p) { j = p.coefficients(); }
void from_json(const json& j, Polynomial& p) { p = Polynomial(j.get<std::vector<double>>()); }

void to_json(json& j, const LevinsonParams& p) {
  j = json{{"P", p.p_poly}, {"Q", p.q_poly}, {"R", p.r_shift}, {"theta", p.theta}};
}
void from_json(const json& j, LevinsonParams& p) {
  j.at("P").get_to(p.p_poly);
  j.at("Q").get_to(p.q_poly);
  j.at("R").get_to(p.r_shift);
  j.at("theta").get_to(p.theta);
}

void to_json(json& j, const ZeroScanReport& r) {
  j = json{{"t_min", r.t_min},
           {"t_max", r.t_max},
           {"step", r.step},
           {"zero_count", r.zero_count},
           {"zeros", r.zeros},
           {"residuals", r.residuals},
           {"estimate_n_t", r.estimate_n_t},
           {"estimate_leading", r.estimate_leading},
           {"coarse_step_warning", r.coarse_step_warning}};
}
void from_json(const json& j, ZeroScanReport& r) {
  j.at("t_min").get_to(r.t_min);
  j.at("t_max").get_to(r.t_max);
  j.at("step").get_to(r.step);
  j.at("zero_count").get_to(r.zero_count);
  j.at("zeros").get_to(r.zeros);
  j.at("residuals").get_to(r.residuals);
  j.at("estimate_n_t").get_to(r.estimate_n_t);
  j.at("estimate_leading").get_to(r.estimate_leading);
  j.at("coarse_step_warning").get_to(r.coarse_step_warning);
}

void to_json(json& j, const ConstantReport& r) {
  j = json{{"params", r.params},
           {"functional", functional_name(r.functional)},
           {"c_exact", r.c_exact},
           {"c_quadrature", r.c_quadrature},
           {"kappa_bound", r.kappa_bound},
           {"c_squared_form", r.c_squared},
           {"kappa_squared_form", r.kappa_squared}};
  if (r.has_claim) {
    j["published_claim"] = json{{"c", r.claim.c}, {"kappa", r.claim.kappa}};
    j["deviation"] = r.deviation;
    j["published_discrepancy"] = r.published_discrepancy;
    j["note"] = r.note;
  }
}
void from_json(const json& j, ConstantReport& r) {
  j.at("params").get_to(r.params);
  r.functional = parse_functional(j.at("functional").get<std::string>());
  j.at("c_exact").get_to(r.c_exact);
  j.at("c_quadrature").get_to(r.c_quadrature);
  j.at("kappa_bound").get_to(r.kappa_bound);
  j.at("c_squared_form").get_to(r.c_squared);
  j.at("kappa_squared_form").get_to(r.kappa_squared);
  r.has_claim = j.contains("published_claim");
  if (r.has_claim) {
    j.at("published_claim").at("c").get_to(r.claim.c);
    j.at("published_claim").at("kappa").get_to(r.claim.kappa);
    j.at("deviation").get_to(r.deviation);
    j.at("published_discrepancy").get_to(r.published_discrepancy);
    j.at("note").get_to(r.note);
  }
}

void to_json(json& j, const RestartRecord& r) { j = json{{"seed_index", r.seed_index}, {"kappa", r.kappa}}; }
void from_json(const json& j, RestartRecord& r) {
  j.at("seed_index").get_to(r.seed_index);
  j.at("kappa").get_to(r.kappa);
}

void to_json(json& j, const OptimizationReport& r) {
  j = json{{"best_params", r.best_params},
           {"best_kappa", r.best_kappa},
           {"best_c", r.best_c},
           {"evaluations", r.evaluations},
           {"restart_trace", r.restart_trace},
           {"functional", functional_name(r.functional)}};
}
void from_json(const json& j, OptimizationReport& r) {
  j.at("best_params").get_to(r.best_params);
  j.at("best_kappa").get_to(r.best_kappa);
  j.at("best_c").get_to(r.best_c);
  j.at("evaluations").get_to(r.evaluations);
  j.at("restart_trace").get_to(r.restart_trace);
  r.functional = parse_functional(j.at("functional").get<std::string>());
}

void to_json(json& j, const MomentSample& s) { j = json{s.t, s.weight, s.value}; }
void from_json(const json& j, MomentSample& s) {
  s.t = j.at(0).get<double>();
  s.weight = j.at(1).get<double>();
  s.value = j.at(2).get<double>();
}

void to_json(json& j, const MomentReport& r) {
  j = json{{"t_scale", r.t_scale},
           {"grid_step", r.grid_step},
           {"grid_points", r.grid_points},
           {"numeric_moment", r.numeric_moment},
           {"refined_moment", r.refined_moment},
           {"offset_moment", r.offset_moment},
           {"self_convergence", r.self_convergence},
           {"w_hat_zero", r.w_hat_zero},
           {"functional", functional_name(r.functional)},
           {"c_value", r.c_value},
           {"main_term", r.main_term},
           {"ratio", r.ratio},
           {"c_squared_form", r.c_squared},
           {"main_term_squared_form", r.main_term_squared},
           {"ratio_squared_form", r.ratio_squared},
           {"mollifier_terms", r.mollifier_terms},
           {"coarse_grid_warning", r.coarse_grid_warning}};
  if (!r.samples.empty()) j["samples"] = r.samples;
}
void from_json(const json& j, MomentReport& r) {
  j.at("t_scale").get_to(r.t_scale);
  j.at("grid_step").get_to(r.grid_step);
  j.at("grid_points").get_to(r.grid_points);
  j.at("numeric_moment").get_to(r.numeric_moment);
  j.at("refined_moment").get_to(r.refined_moment);
  j.at("offset_moment").get_to(r.offset_moment);
  j.at("self_convergence").get_to(r.self_convergence);
  j.at("w_hat_zero").get_to(r.w_hat_zero);
  r.functional = parse_functional(j.at("functional").get<std::string>());
  j.at("c_value").get_to(r.c_value);
  j.at("main_term").get_to(r.main_term);
  j.at("ratio").get_to(r.ratio);
  j.at("c_squared_form").get_to(r.c_squared);
  j.at("main_term_squared_form").get_to(r.main_term_squared);
  j.at("ratio_squared_form").get_to(r.ratio_squared);
  j.at("mollifier_terms").get_to(r.mollifier_terms);
  j.at("coarse_grid_warning").get_to(r.coarse_grid_warning);
  r.samples.clear();
  if (j.contains("samples")) j.at("samples").get_to(r.samples);
}

void to_json(json& j, const RegisteredPolynomial& p) {
  j = json{{"symbol", p.symbol},
           {"provenance", p.provenance()},
           {"rendered", p.render()},
           {"coefficients", p.expanded()}};
}

void to_json(json& j, const PublishedTuple& t) {
  json extra = json::array();
  for (const auto& e : t.extra) extra.push_back(e);
  j = json{{"name", t.name},
           {"source", t.source},
           {"Q", t.q},
           {"P_main", t.p1},
           {"inner_polynomials", extra},
           {"R", t.r_shift},
           {"theta", t.theta_text},
           {"claim", {{"quantity", t.claim_label}, {"value", t.claimed_kappa}}},
           {"not_reproducible_here", t.not_reproducible_here}};
  if (t.claimed_c > 0.0) j["claim"]["c"] = t.claimed_c;
}

}  // namespace clt
