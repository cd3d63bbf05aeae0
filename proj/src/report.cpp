#include "report.hpp"

#include <algorithm>
#include <cmath>

namespace hermipade::report {

template <typename T>
Json coefficients(const std::vector<T>& c) {
  Json out = Json::array();
  for (const auto& x : c) out.push_back(to_string(x));
  return out;
}

Json radius_value(double r) {
  if (std::isinf(r)) return "inf";
  return r;
}

Json residual(const ResidualReport& r) {
  Json out;
  out["basis"] = basis_name(r.basis);
  switch (r.method) {
    case ResidualMethod::exact_coefficients: out["method"] = "exact_coefficients"; break;
    case ResidualMethod::exact_linearization: out["method"] = "exact_linearization"; break;
    case ResidualMethod::sampled: out["method"] = "sampled"; break;
  }
  out["contract_index"] = r.contract_index;
  out["contract_holds"] = r.contract_holds();
  Json fs = Json::array();
  for (const auto& e : r.functions) {
    Json f;
    f["window_start"] = e.window_start;
    f["window"] = e.window;
    f["first_nonzero_index"] = e.first_nonzero ? Json(*e.first_nonzero) : Json(nullptr);
    f["max_abs_low"] = e.max_low;
    fs.push_back(std::move(f));
  }
  out["functions"] = std::move(fs);
  if (r.note) out["note"] = *r.note;
  return out;
}

Json poles(const PoleCertificate& p) {
  auto roots = [](const std::vector<std::complex<double>>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(Json::array({z.real(), z.imag()}));
    return a;
  };
  Json out;
  out["pass"] = p.pass;
  out["reduced"] = p.reduced;
  out["roots"] = roots(p.roots);
  out["inside_closed_disk"] = roots(p.inside);
  out["min_modulus"] = radius_value(p.min_modulus);
  return out;
}

Json radius(const RadiusCheck& r) {
  Json out;
  out["pass"] = r.pass;
  Json e = Json::array();
  for (double x : r.estimated) e.push_back(radius_value(x));
  out["estimated_advisory"] = std::move(e);
  out["notes"] = r.notes;
  return out;
}

Json conditions(const ConditionReport& c) {
  auto one = [](const char* name, const ConditionCheck& k) {
    Json j;
    j["condition"] = name;
    j["status"] = status_name(k.status);
    j["detail"] = k.detail;
    return j;
  };
  Json out;
  out["checklist"] = Json::array({one("1: Hermite-Jacobi approximants exist", c.jacobi),
                                  one("2: radius of convergence > 1", c.radius),
                                  one("3: Q has no zeros in the closed unit disk", c.poles)});
  out["all_passed"] = c.all_passed();
  if (c.hint) out["hint"] = *c.hint;
  return out;
}

template <typename T>
Json series_system(const SeriesSystem<T>& s, const AnalyticityInfo& info) {
  Json out;
  out["basis"] = basis_name(s.basis());
  Json fs = Json::array();
  for (const auto& f : s) {
    Json j;
    j["coeffs"] = coefficients(f.coeffs());
    j["halved_constant"] = f.halved_constant();
    fs.push_back(std::move(j));
  }
  out["series"] = std::move(fs);
  Json r = Json::array();
  for (double x : info.declared_radius) r.push_back(radius_value(x));
  out["radii"] = std::move(r);
  return out;
}

template <typename T>
Json hadamard(const DeterminantValue<T>& h) {
  Json out;
  out["value"] = to_string(h.value);
  out["zero"] = h.is_zero;
  if (h.warning) out["warning"] = *h.warning;
  return out;
}

template <typename T>
Json algebraic(const AlgebraicApproximant<T>& a) {
  Json out;
  out["provenance"] = provenance_name(a.provenance);
  out["normalization"] =
      a.normalization.rule == NormalizationRule::constant_term ? "Q(0) = 1" : "lowest-order coefficient of Q = 1";
  out["normalization_power"] = a.normalization.pivot_power;
  out["Q"] = coefficients(a.Q.coeffs());
  Json ps = Json::array();
  for (const auto& p : a.P) ps.push_back(coefficients(p.coeffs()));
  out["P"] = std::move(ps);
  out["unique"] = a.unique;
  out["nullity"] = a.nullity;
  return out;
}

template <typename T>
Json pipeline(const PipelineResult<T>& r) {
  Json out;
  out["status"] = status_name(r.status);
  out["kind"] = kind_name(r.kind);
  out["conditions"] = conditions(r.conditions);
  if (r.status == PipelineStatus::condition_failed) {
    out["verdict"] = "inconclusive: the conditions are sufficient, not necessary";
  }
  out["hadamard"] = hadamard(r.jacobi.hadamard);
  out["nullity"] = r.jacobi.nullity;
  out["existence_certificate"] = r.jacobi.certificate;
  if (r.jacobi.approx) out["algebraic"] = algebraic(*r.jacobi.approx);
  if (r.radius) out["radius"] = radius(*r.radius);
  if (r.poles) out["poles"] = poles(*r.poles);
  if (r.trig) {
    Json t;
    t["Q_basis"] = "cosine";
    t["Q"] = coefficients(r.trig->Q.coeffs());
    t["P_basis"] = r.kind == ApproximantKind::first ? "cosine" : "sine";
    Json ps = Json::array();
    for (const auto& p : r.trig->P) ps.push_back(coefficients(p.coeffs()));
    t["P"] = std::move(ps);
    out["trigonometric"] = std::move(t);
  }
  if (r.cheb) {
    Json c;
    c["Q_basis"] = "T";
    c["Q"] = coefficients(r.cheb->Q.coeffs());
    c["P_basis"] = r.kind == ApproximantKind::first ? "T" : "U";
    Json ps = Json::array();
    for (const auto& p : r.cheb->P) ps.push_back(coefficients(p.coeffs()));
    c["P"] = std::move(ps);
    c["Q_scale"] = "Q(0) = 1 carried through; Q_hat(x) = |Q(e^{i arccos x})|^2";
    out["chebyshev"] = std::move(c);
  }
  Json res;
  if (r.algebraic_residual) res["power"] = residual(*r.algebraic_residual);
  if (r.trig_residual) res["trigonometric"] = residual(*r.trig_residual);
  if (r.cheb_residual) res["chebyshev"] = residual(*r.cheb_residual);
  if (r.sampled_residual) res["chebyshev_sampled"] = residual(*r.sampled_residual);
  if (!res.empty()) out["residuals"] = std::move(res);
  if (!r.common_factor_degree.empty()) {
    Json lt;
    lt["gcd_degree"] = r.common_factor_degree;
    lt["lowest_terms"] = std::all_of(r.common_factor_degree.begin(), r.common_factor_degree.end(),
                                     [](int d) { return d == 0; });
    out["lowest_terms"] = std::move(lt);
  }
  return out;
}

#define HERMIPADE_INSTANTIATE(T)                                                 \
  template Json coefficients(const std::vector<T>&);                             \
  template Json series_system(const SeriesSystem<T>&, const AnalyticityInfo&);   \
  template Json hadamard(const DeterminantValue<T>&);                            \
  template Json algebraic(const AlgebraicApproximant<T>&);                       \
  template Json pipeline(const PipelineResult<T>&);

HERMIPADE_INSTANTIATE(Rational)
HERMIPADE_INSTANTIATE(double)

#undef HERMIPADE_INSTANTIATE

}  // namespace hermipade::report
