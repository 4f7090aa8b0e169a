#include "spin7/json_io.hpp"

#include <cmath>

namespace spin7 {

namespace {

std::vector<int> axes_of(const Json& t) {
  if (!t.contains("axes") || !t["axes"].is_array()) throw InputError("form term needs an 'axes' array");
  std::vector<int> axes;
  for (const auto& a : t["axes"]) {
    if (!a.is_number_integer()) throw InputError("axes must be integers");
    axes.push_back(a.get<int>());
  }
  return axes;
}

template <class T>
T coeff_of(const Json& c);

template <>
double coeff_of<double>(const Json& c) {
  double v = 0.0;
  if (c.is_number()) v = c.get<double>();
  else if (c.is_string()) v = to_double(parse_rational(c.get<std::string>()));
  else throw InputError("coefficient must be a number or a rational string");
  if (!std::isfinite(v)) throw InputError("non-finite coefficient");
  return v;
}

template <>
Rational coeff_of<Rational>(const Json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_number()) {
    const double v = c.get<double>();
    if (!std::isfinite(v)) throw InputError("non-finite coefficient");
    return Rational(v);
  }
  throw InputError("coefficient must be a number or a rational string");
}

template <class T>
KForm<T> parse_form(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw InputError("form needs an integer 'degree'");
  const int degree = j["degree"].get<int>();
  if (degree < 0 || degree > kDim) throw InputError("form degree out of range");
  KForm<T> b(degree);
  if (!j.contains("terms")) return b;
  if (!j["terms"].is_array()) throw InputError("'terms' must be an array");
  for (const auto& t : j["terms"]) {
    const auto axes = axes_of(t);
    if (static_cast<int>(axes.size()) != degree) throw InputError("term length does not match degree");
    if (!t.contains("c")) throw InputError("form term needs a coefficient 'c'");
    MultiIndex sorted;
    int sign = 0;
    try {
      sign = sort_sign(axes, &sorted);
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    if (sign == 0) throw InputError("repeated axis in form term");
    b.add(sorted, T(sign) * coeff_of<T>(t["c"]));
  }
  return b;
}

template <class T>
Json form_json(const KForm<T>& b) {
  Json terms = Json::array();
  for (const auto& [idx, c] : b.terms()) {
    Json t;
    t["axes"] = idx.axes();
    if constexpr (ScalarTraits<T>::exact) t["c"] = to_string(c);
    else t["c"] = c;
    terms.push_back(t);
  }
  Json j;
  j["degree"] = b.degree();
  j["terms"] = terms;
  return j;
}

}  // namespace

Json to_json(const KForm<double>& b) { return form_json(b); }
Json to_json(const KForm<Rational>& b) { return form_json(b); }
KForm<double> form_from_json(const Json& j) { return parse_form<double>(j); }
KForm<Rational> rational_form_from_json(const Json& j) { return parse_form<Rational>(j); }

Json to_json(const LieAlgebra8<double>& g, double tol) {
  Json br = Json::array();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        const double c = g.c(i, j, k);
        if (std::fabs(c) <= tol) continue;
        br.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", c}});
      }
  return Json{{"brackets", br}};
}

LieAlgebra8<double> algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("brackets") || !j["brackets"].is_array())
    throw InputError("algebra needs a 'brackets' array");
  std::vector<Bracket<double>> br;
  for (const auto& b : j["brackets"]) {
    for (const char* key : {"i", "j", "k"})
      if (!b.contains(key) || !b[key].is_number_integer()) throw InputError(std::string("bracket needs integer '") + key + "'");
    if (!b.contains("c")) throw InputError("bracket needs a coefficient 'c'");
    br.push_back({b["i"].get<int>(), b["j"].get<int>(), b["k"].get<int>(), coeff_of<double>(b["c"])});
  }
  return LieAlgebra8<double>::from_brackets(br);
}

Mat7 qa_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("E")) throw InputError("input needs a 7x7 matrix 'E'");
  const Json& e = j["E"];
  if (!e.is_array() || e.size() != 7) throw InputError("'E' must have 7 rows");
  Mat7 m;
  for (int r = 0; r < 7; ++r) {
    if (!e[r].is_array() || e[r].size() != 7) throw InputError("each row of 'E' must have 7 entries");
    for (int c = 0; c < 7; ++c) m(r, c) = coeff_of<double>(e[r][c]);
  }
  return m;
}

Json to_json(const Mat7& m) {
  Json rows = Json::array();
  for (int r = 0; r < 7; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 7; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Mat8& m) {
  Json rows = Json::array();
  for (int r = 0; r < 8; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 8; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Vec7& v) {
  Json a = Json::array();
  for (int i = 0; i < 7; ++i) a.push_back(v(i));
  return a;
}

Json to_json(const Vec8<double>& v) { return Json(std::vector<double>(v.begin(), v.end())); }
Json to_json(const Spinor16<double>& s) { return Json(std::vector<double>(s.begin(), s.end())); }

Json to_json(const EndoDecomp& d) {
  return Json{{"lam", d.lam}, {"s2", to_json(d.s2)}, {"s3", to_json(d.s3)}, {"svec", to_json(d.svec)}};
}

Json to_json(const FrameData& fd) {
  return Json{{"mu", fd.mu}, {"a2", to_json(fd.a2)}, {"a3", to_json(fd.a3)}, {"avec", to_json(fd.avec)},
              {"uvec", to_json(fd.uvec)}};
}

Json to_json(const TorsionFlags& f) {
  return Json{{"parallel", f.parallel}, {"lcp", f.lcp}, {"balanced", f.balanced}, {"mixed", f.mixed}};
}

Json to_json(const TorsionResiduals& r) {
  return Json{{"parallel", r.parallel}, {"lcp", r.lcp}, {"balanced", r.balanced}, {"dual_path", r.dual_path}};
}

Json to_json(const TorsionReport& r) {
  Json j;
  j["V"] = to_json(r.v);
  j["theta"] = to_json(r.theta);
  j["gamma8"] = to_json(r.gamma8);
  j["gamma48"] = to_json(r.gamma48);
  j["star_d_omega"] = to_json(r.star_d_omega);
  j["star_d_omega_ce"] = to_json(r.star_d_omega_ce);
  j["flags"] = to_json(r.flags);
  j["residuals"] = to_json(r.residuals);
  j["tolerance"] = r.tolerance;
  return j;
}

Json to_json(const QAReport& r) {
  Json j;
  j["E"] = to_json(r.e);
  j["lambdas"] = r.normal_form.lambdas;
  j["lambda_defect"] = r.lambda_defect;
  j["lambda_condition"] = r.lambda_condition;
  j["abelian"] = r.abelian;
  if (!r.note.empty()) j["note"] = r.note;
  j["admits_parallel"] = r.admits_parallel;
  j["admits_lcp_nonparallel"] = r.admits_lcp_nonparallel;
  j["admits_balanced"] = r.admits_balanced;
  j["admits_mixed"] = to_string(r.admits_mixed);
  j["h"] = r.h ? Json(*r.h) : Json(nullptr);
  j["trace"] = r.trace;
  j["unimodular"] = r.unimodular;
  j["det"] = r.det_value;
  j["det_formula"] = r.det_formula_value;
  j["kernel_dim"] = r.kernel_dim;
  Json w = Json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"flag", x.flag}, {"eta", to_json(x.eta)}, {"flags", to_json(x.flags)}, {"residuals", to_json(x.residuals)}});
  j["witnesses"] = w;
  j["flat"] = r.flat;
  j["max_curvature"] = r.max_curvature;
  j["tolerance"] = r.tolerance;
  j["witness_tolerance"] = r.witness_tolerance;
  return j;
}

Json to_json(const GammaRep& rep) {
  Json g = Json::array();
  for (const auto& m : rep.gamma) g.push_back(m);
  return Json{{"gamma", g},
              {"nu8", rep.nu8},
              {"gamma0_flipped", rep.gamma0_flipped},
              {"induced_cl7_theta", rep.induced_cl7_theta},
              {"convention", chirality_convention()}};
}

}  // namespace spin7
