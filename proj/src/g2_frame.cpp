#include "spin7/g2_frame.hpp"

#include <cmath>

namespace spin7 {

namespace {

const Vec8<double> kN = basis_vec8<double>(0);

KForm<double> e0_form() { return KForm<double>::monomial(MultiIndex{0}); }

void require_unit(const Vec8<double>& n, double tol) {
  double s = 0;
  for (double x : n) s += x * x;
  if (std::fabs(s - 1.0) > tol) throw PreconditionError("normal vector must be a unit vector");
}

}  // namespace

KForm<double> psi_from_omega(const Spin7Form<double>& omega, const Vec8<double>& n, double tol) {
  require_unit(n, tol);
  const KForm<double> psi = contract(n, omega.omega);
  const KForm<double> n_psi = wedge(KForm<double>::one_form(n), psi);
  const KForm<double> rebuilt = n_psi + hodge(n_psi);
  if (max_abs(rebuilt - omega.omega) > 1e3 * tol) throw ConventionError("Omega != n^Psi + *_D Psi");
  return psi;
}

double psi_value(const KForm<double>& psi, int a, int b, int c) { return psi.value({a + 1, b + 1, c + 1}); }

Mat7 cross_matrix(const KForm<double>& psi, const Vec7& s) {
  Mat7 m = Mat7::Zero();
  for (int k = 0; k < 7; ++k)
    for (int j = 0; j < 7; ++j) {
      double v = 0;
      for (int l = 0; l < 7; ++l)
        if (s(l) != 0.0) v += s(l) * psi_value(psi, j, l, k);
      m(k, j) = v;
    }
  return m;
}

KForm<double> two_form_of(const Mat7& m) {
  KForm<double> b(2);
  for (int a = 0; a < 7; ++a)
    for (int c = a + 1; c < 7; ++c) b.add(MultiIndex{a + 1, c + 1}, m(c, a));
  return b;
}

KForm<double> one_form_of(const Vec7& v) { return KForm<double>::one_form(lift(v)); }

Vec8<double> lift(const Vec7& v) {
  Vec8<double> out = zero_vec8<double>();
  for (int i = 0; i < 7; ++i) out[i + 1] = v(i);
  return out;
}

Mat7 EndoDecomp::reassemble(const KForm<double>& psi) const {
  return lam * Mat7::Identity() + s2 + s3 + cross_matrix(psi, svec);
}

EndoDecomp decompose_endo(const KForm<double>& psi, const Mat7& m) {
  EndoDecomp d;
  d.lam = m.trace() / 7.0;
  const Mat7 sym = 0.5 * (m + m.transpose());
  const Mat7 skew = 0.5 * (m - m.transpose());
  d.s3 = sym - d.lam * Mat7::Identity();
  for (int j = 0; j < 7; ++j) {
    const Mat7 cj = cross_matrix(psi, Vec7::Unit(j));
    d.svec(j) = (skew.cwiseProduct(cj)).sum() / cj.squaredNorm();
  }
  d.s2 = skew - cross_matrix(psi, d.svec);
  return d;
}

Mat7 frame_endomorphism(const KForm<double>& psi, const FrameData& fd) {
  return fd.mu * Mat7::Identity() + fd.a2 + fd.a3 + cross_matrix(psi, fd.avec);
}

KForm<double> beta3_form(const KForm<double>& psi, const Mat7& a3) {
  CovariantTensor<double> t(3);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        double v = 0;
        for (int m = 0; m < 7; ++m)
          if (a3(m, a) != 0.0) v += a3(m, a) * psi_value(psi, m, b, c);
        t.at({a + 1, b + 1, c + 1}) = v;
      }
  return alternate(t);
}

PureComponents pure_components(const KForm<double>& psi, const FrameData& fd) {
  const KForm<double> n_psi = wedge(e0_form(), psi);
  const KForm<double> star_psi = hodge(n_psi);
  const Vec8<double> au = lift(fd.avec + fd.uvec);

  const KForm<double> beta2 = two_form_of(fd.a2);
  const KForm<double> beta3 = beta3_form(psi, fd.a3);

  PureComponents pc;
  pc.c48 = (2.0 / 7.0) * (-4.0 * contract(au, n_psi) + 3.0 * contract(au, star_psi)) + 4.0 * wedge(e0_form(), beta2) -
           6.0 * beta3;
  Vec8<double> w = lift(fd.uvec - 6.0 * fd.avec);
  w[0] += 7.0 * fd.mu;
  pc.c8 = (8.0 / 7.0) * contract(w, n_psi + star_psi);
  return pc;
}

double dirac_identity(const GammaRep& rep, const Spinor16<double>& eta, const FrameData& fd) {
  const Spin7Form<double> om = omega_from_spinor(rep, eta);
  const KForm<double> psi = contract(kN, om.omega);
  const Mat7 a = frame_endomorphism(psi, fd);
  Spinor16<double> lhs = zero_spinor<double>();
  for (int i = 0; i < 7; ++i) {
    const Spinor16<double> ax = clifford_mul(rep, lift(a.col(i)), eta);
    lhs = spinor_add(lhs, gamma_apply(rep, i + 1, ax));
  }
  Spinor16<double> rhs = spinor_scale(eta, -7.0 * fd.mu);
  rhs = spinor_add(rhs, gamma_apply(rep, 0, clifford_mul(rep, lift(fd.avec), eta)), -6.0);
  return spinor_norm(spinor_add(lhs, rhs, -1.0));
}

FrameData frame_data_from_algebra(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta) {
  const Spin7Form<double> om = omega_from_spinor(rep, eta);
  const KForm<double> psi = contract(kN, om.omega);
  const Connection nabla = levi_civita(g);
  std::array<Spinor16<double>, 7> n_x_eta;
  for (int k = 0; k < 7; ++k) n_x_eta[k] = gamma_apply(rep, 0, gamma_apply(rep, k + 1, eta));
  Mat7 a = Mat7::Zero();
  for (int j = 0; j < 7; ++j) {
    const Spinor16<double> d = spinor_derivative(rep, nabla, eta, j + 1);
    for (int k = 0; k < 7; ++k) a(k, j) = spinor_inner(d, n_x_eta[k]);
  }
  const Spinor16<double> d0 = spinor_derivative(rep, nabla, eta, 0);
  FrameData fd;
  for (int k = 0; k < 7; ++k) fd.uvec(k) = -spinor_inner(d0, n_x_eta[k]);
  const EndoDecomp dec = decompose_endo(psi, a);
  fd.mu = dec.lam;
  fd.a2 = dec.s2;
  fd.a3 = dec.s3;
  fd.avec = dec.svec;
  return fd;
}

ScenarioKind parse_scenario_kind(const std::string& name) {
  if (name == "hypersurface") return ScenarioKind::Hypersurface;
  if (name == "principal_bundle") return ScenarioKind::PrincipalBundle;
  if (name == "spin_cone") return ScenarioKind::SpinCone;
  if (name == "warped_base") return ScenarioKind::WarpedBase;
  throw InputError("unknown scenario kind '" + name + "'");
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Hypersurface: return "hypersurface";
    case ScenarioKind::PrincipalBundle: return "principal_bundle";
    case ScenarioKind::SpinCone: return "spin_cone";
    case ScenarioKind::WarpedBase: return "warped_base";
  }
  return "?";
}

FrameData scenario(ScenarioKind kind, const ScenarioParams& p, const KForm<double>& psi) {
  FrameData fd;
  fd.mu = p.s.lam;
  fd.a2 = p.s.s2;
  fd.a3 = p.s.s3;
  fd.avec = p.s.svec;
  switch (kind) {
    case ScenarioKind::Hypersurface:
      // A = S - W/2 with W = 7H Id + W3; the distribution is integrable.
      fd.mu = p.s.lam - 3.5 * p.mean_curvature;
      fd.a3 = p.s.s3 - 0.5 * p.w3;
      fd.uvec = p.u;
      break;
    case ScenarioKind::PrincipalBundle: {
      // W = 0, L = Lbar/2, so A = S - Lbar/4; U = -(3/4) Lbar in the X -> X x v convention.
      const EndoDecomp l = decompose_endo(psi, p.lbar);
      fd.a2 = p.s.s2 - 0.25 * l.s2;
      fd.avec = p.s.svec - 0.25 * l.svec;
      fd.uvec = -0.75 * l.svec;
      break;
    }
    case ScenarioKind::SpinCone: {
      const double s = std::exp(-p.f);
      fd.mu = s * p.s.lam + 0.5 * p.f_prime;
      fd.a2 = s * p.s.s2;
      fd.a3 = s * p.s.s3;
      fd.avec = s * p.s.svec;
      break;
    }
    case ScenarioKind::WarpedBase:
      fd.uvec = 0.5 * p.grad_f;
      break;
  }
  return fd;
}

AmbientClass parse_ambient_class(const std::string& name) {
  if (name == "parallel") return AmbientClass::Parallel;
  if (name == "lcp") return AmbientClass::Lcp;
  if (name == "balanced") return AmbientClass::Balanced;
  throw InputError("unknown ambient class '" + name + "'");
}

std::string to_string(AmbientClass c) {
  switch (c) {
    case AmbientClass::Parallel: return "parallel";
    case AmbientClass::Lcp: return "lcp";
    case AmbientClass::Balanced: return "balanced";
  }
  return "?";
}

std::vector<Relation> g2type_constraints(AmbientClass ambient) {
  const Relation u_zero{"U=0", [](HypersurfaceData& d) { d.u.setZero(); },
                        [](const HypersurfaceData& d) { return d.u.norm(); }};
  const Relation s_zero{"S=0", [](HypersurfaceData& d) { d.s.svec.setZero(); },
                        [](const HypersurfaceData& d) { return d.s.svec.norm(); }};
  const Relation s2_zero{"S2=0", [](HypersurfaceData& d) { d.s.s2.setZero(); },
                         [](const HypersurfaceData& d) { return d.s.s2.norm(); }};
  const Relation lam_h{"2lambda=7H", [](HypersurfaceData& d) { d.s.lam = 3.5 * d.mean_curvature; },
                       [](const HypersurfaceData& d) { return std::fabs(2.0 * d.s.lam - 7.0 * d.mean_curvature); }};
  const Relation s3_w3{"2S3=W3", [](HypersurfaceData& d) { d.s.s3 = 0.5 * d.w3; },
                       [](const HypersurfaceData& d) { return (2.0 * d.s.s3 - d.w3).norm(); }};
  const Relation u_minus_s{"U=-S", [](HypersurfaceData& d) { d.u = -d.s.svec; },
                           [](const HypersurfaceData& d) { return (d.u + d.s.svec).norm(); }};
  const Relation u_six_s{"U=6S", [](HypersurfaceData& d) { d.u = 6.0 * d.s.svec; },
                         [](const HypersurfaceData& d) { return (d.u - 6.0 * d.s.svec).norm(); }};
  switch (ambient) {
    case AmbientClass::Parallel: return {u_zero, s_zero, s2_zero, lam_h, s3_w3};
    case AmbientClass::Lcp: return {u_minus_s, s2_zero, s3_w3};
    case AmbientClass::Balanced: return {u_six_s, lam_h};
  }
  return {};
}

FrameData hypersurface_frame_data(const HypersurfaceData& d) {
  ScenarioParams p;
  p.s = d.s;
  p.mean_curvature = d.mean_curvature;
  p.w3 = d.w3;
  p.u = d.u;
  return scenario(ScenarioKind::Hypersurface, p, KForm<double>(3));
}

double ambient_target(AmbientClass ambient, const PureComponents& pc) {
  switch (ambient) {
    case AmbientClass::Parallel: return std::max(max_abs(pc.c48), max_abs(pc.c8));
    case AmbientClass::Lcp: return max_abs(pc.c48);
    case AmbientClass::Balanced: return max_abs(pc.c8);
  }
  return 0.0;
}

}  // namespace spin7
