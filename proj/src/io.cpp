#include "mellin/io.hpp"

#include <cmath>
#include <sstream>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

Real num_or_throw(const Json& j, const char* field) {
  if (!j.is_number()) throw InputError(std::string("field '") + field + "' must be a number");
  return j.get<Real>();
}

std::string fmt(Real v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<Real>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex values must be [re, im] pairs");
  return Complex(j[0].get<Real>(), j[1].get<Real>());
}

Json kernel_to_json(const MeromorphicKernel& k) {
  Json terms = Json::array();
  for (const auto& t : k.terms)
    terms.push_back({{"c", to_json(t.c)}, {"m", t.m}, {"d", to_json(t.d)}});
  return Json{{"terms", terms}};
}

MeromorphicKernel kernel_from_json(const Json& j) {
  if (j.contains("builtin")) {
    std::string name = j.at("builtin").get<std::string>();
    if (name == "power_pole")
      return make_power_pole(complex_from_json(j.at("c")), j.at("m").get<int>());
    if (name == "n_alpha")
      return make_classical(ClassicalKernel::N_alpha, num_or_throw(j.at("alpha"), "alpha"));
    if (name == "n_alpha_star")
      return make_classical(ClassicalKernel::N_alpha_star, num_or_throw(j.at("alpha"), "alpha"));
    if (name == "m_alpha")
      return make_classical(ClassicalKernel::M_alpha, num_or_throw(j.at("alpha"), "alpha"));
    if (name == "n_mk") return make_n_mk(j.at("m").get<int>(), j.at("k").get<int>());
    throw InputError("unknown kernel builtin '" + name + "'");
  }
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw InputError("kernel needs a 'terms' array or a 'builtin' name");
  MeromorphicKernel k;
  for (const auto& t : j.at("terms"))
    k.terms.push_back({complex_from_json(t.at("c")), t.at("m").get<int>(),
                       complex_from_json(t.at("d"))});
  return k;
}

Json multiplier_to_json(const Multiplier& m) {
  switch (m.kind) {
    case Multiplier::Kind::Constant:
      return Json{{"kind", "constant"}, {"value", to_json(m.param_value)}};
    case Multiplier::Kind::Sign:
      return Json{{"kind", "sign"}};
    case Multiplier::Kind::BlaschkePower:
      return Json{{"kind", "blaschke_power"}, {"n", m.param_n}};
    case Multiplier::Kind::GPower:
      return Json{{"kind", "g_power"},
                  {"s", m.param_s},
                  {"gamma1", to_json(m.param_gamma1)},
                  {"gamma2", to_json(m.param_gamma2)}};
    default:
      throw InputError("multiplier kind is not serializable");
  }
}

Multiplier multiplier_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant_multiplier(complex_from_json(j.at("value")));
  if (kind == "sign") return sign_multiplier();
  if (kind == "blaschke_power") return blaschke_power(j.at("n").get<int>());
  if (kind == "g_power")
    return g_power(num_or_throw(j.at("s"), "s"), complex_from_json(j.at("gamma1")),
                   complex_from_json(j.at("gamma2")));
  if (kind == "table") {
    std::vector<Real> xi = j.at("xi").get<std::vector<Real>>();
    std::vector<Complex> values;
    for (const auto& v : j.at("values")) values.push_back(complex_from_json(v));
    return table_multiplier(std::move(xi), std::move(values),
                            complex_from_json(j.at("lim_minus_inf")),
                            complex_from_json(j.at("lim_plus_inf")),
                            complex_from_json(j.at("lim_zero_minus")),
                            complex_from_json(j.at("lim_zero_plus")),
                            j.value("analytic_lower", false),
                            j.value("analytic_upper", false));
  }
  throw InputError("unknown multiplier kind '" + kind + "'");
}

Json expression_to_json(const OperatorExpression& e) {
  Json out;
  if (e.dim() == 1) {
    out["d0"] = to_json(e.d0(0, 0));
  } else {
    Json rows = Json::array();
    for (int i = 0; i < e.dim(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < e.dim(); ++j) row.push_back(to_json(e.d0(i, j)));
      rows.push_back(row);
    }
    out["d0"] = rows;
  }
  if (e.a0) out["a0"] = multiplier_to_json(*e.a0);
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json jt{{"a", multiplier_to_json(t.a)},
            {"kernel", kernel_to_json(MeromorphicKernel{{t.pole}})},
            {"b", multiplier_to_json(t.b)}};
    if (t.coef) {
      Json rows = Json::array();
      for (int i = 0; i < t.coef->rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.coef->cols(); ++j) row.push_back(to_json((*t.coef)(i, j)));
        rows.push_back(row);
      }
      jt["coef"] = rows;
    }
    terms.push_back(jt);
  }
  out["terms"] = terms;
  return out;
}

namespace {

Matrix matrix_from_json(const Json& j) {
  if (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number()))
    return Matrix::Constant(1, 1, complex_from_json(j));
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nested [re,im] array");
  int n = static_cast<int>(j.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(i)].size()) != n)
      throw InputError("matrix rows must all have the same length");
    for (int c = 0; c < n; ++c)
      m(i, c) = complex_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)]);
  }
  return m;
}

}  // namespace

OperatorExpression expression_from_json(const Json& j) {
  OperatorExpression e;
  if (j.contains("d0")) e.d0 = matrix_from_json(j.at("d0"));
  if (j.contains("a0")) e.a0 = multiplier_from_json(j.at("a0"));
  if (j.contains("terms"))
    for (const auto& jt : j.at("terms")) {
      OperatorExpression::Term t{multiplier_from_json(jt.at("a")),
                                 PoleTerm{},
                                 multiplier_from_json(jt.at("b")),
                                 std::nullopt};
      MeromorphicKernel k = kernel_from_json(jt.at("kernel"));
      if (k.terms.size() != 1)
        throw InputError("expression kernels must be single-pole");
      t.pole = k.terms.front();
      if (jt.contains("coef")) t.coef = matrix_from_json(jt.at("coef"));
      e.terms.push_back(std::move(t));
    }
  e.validate();
  return e;
}

AnalysisSpec analysis_spec_from_json(const Json& j) {
  AnalysisSpec spec;
  const Json& sp = j.at("space");
  Real p = num_or_throw(sp.at("p"), "p");
  Real gw = sp.contains("gamma_weight") ? num_or_throw(sp.at("gamma_weight"), "gamma_weight") : 0.0;
  Real s = sp.contains("s") ? num_or_throw(sp.at("s"), "s") : 0.0;
  spec.space = SpaceParams(p, gw, s);
  if (sp.contains("beta")) {
    Real beta = num_or_throw(sp.at("beta"), "beta");
    if (std::abs(beta - spec.space.beta) > 1e-12 * (1.0 + beta))
      throw InputError("field 'beta' disagrees with (1+gamma_weight)/p");
  }
  std::string setting = j.value("setting", "lp");
  if (setting != "lp" && setting != "bessel")
    throw InputError("field 'setting' must be \"lp\" or \"bessel\"");
  spec.bessel = (setting == "bessel");
  spec.expression = expression_from_json(j.at("expression"));
  if (j.contains("grid")) spec.n_per_leg = j.at("grid").value("n_per_leg", 64);
  if (j.contains("tolerances")) {
    spec.tolerances.tol_ell = j.at("tolerances").value("tol_ell", 1e-10);
    spec.tolerances.closure_tol = j.at("tolerances").value("closure_defect", 1e-6);
  }
  return spec;
}

Json analysis_spec_to_json(const AnalysisSpec& spec) {
  Json j;
  j["space"] = {{"p", spec.space.p},
                {"gamma_weight", spec.space.gamma_weight},
                {"s", spec.space.s}};
  j["setting"] = spec.bessel ? "bessel" : "lp";
  j["expression"] = expression_to_json(spec.expression);
  j["grid"] = {{"n_per_leg", spec.n_per_leg}};
  j["tolerances"] = {{"tol_ell", spec.tolerances.tol_ell},
                     {"closure_defect", spec.tolerances.closure_tol}};
  return j;
}

Json report_to_json(const FredholmReport& rep) {
  return Json{{"min_abs_det", rep.min_abs_det},
              {"elliptic", rep.elliptic},
              {"winding", rep.winding},
              {"index", rep.index},
              {"local_invertible_at_zero", rep.locally_invertible_at_zero}};
}

Json identity_result_to_json(const IdentityCheckResult& res, const Json& parameters) {
  Json j{{"identity", identity_name(res.identity)},
         {"parameters", parameters},
         {"rel_residual", res.rel_residual},
         {"grid", {{"n", res.n}, {"t_min", res.t_min}, {"t_max", res.t_max}}}};
  if (!std::isnan(res.k2_remainder_rel)) j["remainder_rel"] = res.k2_remainder_rel;
  return j;
}

std::string symbol_trace_csv(const SymbolField& field) {
  std::ostringstream os;
  os << "arclen,leg,coord,re_det,im_det\n";
  for (size_t i = 0; i < field.points.size(); ++i) {
    const auto& p = field.points[i];
    Complex d = field.det_at(i);
    os << fmt(p.arclen) << ',' << leg_name(p.leg) << ',' << fmt(p.coord) << ','
       << fmt(d.real()) << ',' << fmt(d.imag()) << '\n';
  }
  return os.str();
}

}  // namespace mellin
