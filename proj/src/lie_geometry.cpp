#include "spin7/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace spin7 {

Connection levi_civita(const LieAlgebra8<double>& g) {
  Connection nabla;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) nabla(i, j, k) = 0.5 * (g.c(i, j, k) - g.c(j, k, i) + g.c(k, i, j));
  return nabla;
}

Spinor16<double> spinor_derivative(const GammaRep& rep, const Connection& nabla, const Spinor16<double>& eta, int i) {
  Spinor16<double> out = zero_spinor<double>();
  for (int j = 0; j < 8; ++j)
    for (int k = j + 1; k < 8; ++k) {
      const double c = nabla(i, j, k);
      if (c == 0.0) continue;
      out = spinor_add(out, gamma_apply(rep, j, gamma_apply(rep, k, eta)), 0.5 * c);
    }
  return out;
}

Spinor16<double> spinor_derivative(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                                   int i) {
  return spinor_derivative(rep, levi_civita(g), eta, i);
}

namespace {

std::array<Spinor16<double>, 8> all_derivatives(const GammaRep& rep, const Connection& nabla,
                                                const Spinor16<double>& eta) {
  std::array<Spinor16<double>, 8> d;
  for (int i = 0; i < 8; ++i) d[i] = spinor_derivative(rep, nabla, eta, i);
  return d;
}

DiracData dirac_from(const GammaRep& rep, const std::array<Spinor16<double>, 8>& nab, const Spinor16<double>& eta) {
  DiracData out{zero_spinor<double>(), {}};
  for (int i = 0; i < 8; ++i) out.d_eta = spinor_add(out.d_eta, gamma_apply(rep, i, nab[i]));
  out.v = solve_clifford_vector(rep, eta, out.d_eta);
  return out;
}

double form_norm(const KForm<double>& b) { return std::sqrt(norm2(b)); }

}  // namespace

DiracData dirac(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta) {
  return dirac_from(rep, all_derivatives(rep, levi_civita(g), eta), eta);
}

KForm<double> intrinsic_torsion(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                                int i) {
  return 2.0 * c_inverse(rep, eta, spinor_derivative(rep, g, eta, i));
}

TorsionReport star_d_omega(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                           double tol) {
  TorsionReport rp;
  rp.tolerance = tol;
  rp.omega = omega_from_spinor(rep, eta);
  const KForm<double>& omega = rp.omega.omega;
  const auto nab = all_derivatives(rep, levi_civita(g), eta);
  const DiracData dd = dirac_from(rep, nab, eta);
  rp.v = dd.v;

  CovariantTensor<double> t(3);
  for (int a = 0; a < 8; ++a) {
    const KForm<double> ca = c_inverse(rep, eta, nab[a]);
    for (const auto& [idx, c] : ca.terms()) {
      const auto bc = idx.axes();
      t.at({a, bc[0], bc[1]}) = c;
      t.at({a, bc[1], bc[0]}) = -c;
    }
  }
  rp.alt_term = alternate(t);
  rp.gamma8 = contract(rp.v, omega);
  rp.gamma48 = 3.0 * rp.gamma8 - 84.0 * rp.alt_term;
  rp.star_d_omega = 2.0 * (rp.gamma8 - 12.0 * rp.alt_term);
  rp.star_d_omega_ce = hodge(ce_differential(g, omega));
  Vec8<double> theta = rp.v;
  for (auto& x : theta) x *= 8.0 / 7.0;
  rp.theta = KForm<double>::one_form(theta);

  double cmax = 1.0;
  for (double c : g.constants()) cmax = std::max(cmax, std::fabs(c));
  rp.residuals.dual_path = max_abs(rp.star_d_omega - rp.star_d_omega_ce);
  if (rp.residuals.dual_path > tol * cmax)
    throw InconsistencyError("spinorial and Chevalley-Eilenberg *dOmega disagree");

  double par = 0.0;
  for (const auto& s : nab) par = std::max(par, spinor_norm(s));
  rp.residuals.parallel = par;
  rp.residuals.lcp = form_norm(rp.gamma8 - 28.0 * rp.alt_term);
  rp.residuals.balanced = spinor_norm(dd.d_eta);
  rp.flags.parallel = rp.residuals.parallel <= tol;
  rp.flags.lcp = rp.residuals.lcp <= tol;
  rp.flags.balanced = rp.residuals.balanced <= tol;
  rp.flags.mixed = !(rp.flags.parallel || rp.flags.lcp || rp.flags.balanced);
  return rp;
}

double characteristic_check(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                            const KForm<double>& torsion) {
  const Connection nabla = levi_civita(g);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Spinor16<double> lhs = spinor_add(spinor_derivative(rep, nabla, eta, i),
                                            form_action(rep, contract_axis(i, torsion), eta), 0.25);
    worst = std::max(worst, spinor_norm(lhs));
  }
  return worst;
}

KForm<double> lee_form_from_d_omega(const Spin7Form<double>& omega, const KForm<double>& d_omega) {
  if (d_omega.degree() != 5) throw DegreeError("expected a 5-form");
  std::array<KForm<double>, 8> basis;
  for (int j = 0; j < 8; ++j)
    basis[j] = wedge(KForm<double>::monomial(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << j))), omega.omega);
  DenseMatrix<double> gram = dense_zero<double>(8, 8);
  std::vector<double> rhs(8);
  for (int j = 0; j < 8; ++j) {
    rhs[j] = inner(basis[j], d_omega);
    for (int k = 0; k < 8; ++k) gram[j][k] = inner(basis[j], basis[k]);
  }
  const auto x = solve(gram, rhs);
  Vec8<double> v;
  for (int j = 0; j < 8; ++j) v[j] = x[j];
  return KForm<double>::one_form(v);
}

double Curvature::max_abs() const {
  double m = 0.0;
  for (const auto& v : r)
    for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

Curvature curvature(const LieAlgebra8<double>& g) {
  const Connection nabla = levi_civita(g);
  Curvature out;
  // nabla_i e_k = sum_m nabla(i,k,m) e_m
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        Vec8<double> v = zero_vec8<double>();
        for (int m = 0; m < 8; ++m) {
          const double a = nabla(j, k, m);
          const double b = nabla(i, k, m);
          for (int n = 0; n < 8; ++n) v[n] += a * nabla(i, m, n) - b * nabla(j, m, n);
        }
        for (int p = 0; p < 8; ++p) {
          const double cp = g.c(i, j, p);
          if (cp == 0.0) continue;
          for (int n = 0; n < 8; ++n) v[n] -= cp * nabla(p, k, n);
        }
        out(i, j, k) = v;
      }
  return out;
}

double bianchi_defect(const Curvature& r) {
  double m = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        for (int n = 0; n < 8; ++n) m = std::max(m, std::fabs(r(i, j, k)[n] + r(j, k, i)[n] + r(k, i, j)[n]));
  return m;
}

double difference(const Curvature& a, const Curvature& b) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.r.size(); ++p)
    for (int n = 0; n < 8; ++n) m = std::max(m, std::fabs(a.r[p][n] - b.r[p][n]));
  return m;
}

}  // namespace spin7
