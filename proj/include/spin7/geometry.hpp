#pragma once

// Left-invariant Riemannian geometry of metric Lie algebras in an orthonormal frame, and the
// torsion of the Spin(7) structure defined by an invariant spinor.

#include <array>

#include "spin7/spin7_structure.hpp"

namespace spin7 {

// gamma(i, j, k) = g(nabla_{e_i} e_j, e_k).
struct Connection {
  std::array<double, 512> coeff{};
  double operator()(int i, int j, int k) const { return coeff[static_cast<std::size_t>((i * 8 + j) * 8 + k)]; }
  double& operator()(int i, int j, int k) { return coeff[static_cast<std::size_t>((i * 8 + j) * 8 + k)]; }
};

// Koszul: 2 g(nabla_i e_j, e_k) = c_ij^k - c_jk^i + c_ki^j.
Connection levi_civita(const LieAlgebra8<double>& g);

// nabla_{e_i} eta = 1/2 sum_{j<k} gamma(i,j,k) e_j e_k eta for a frame-constant spinor.
Spinor16<double> spinor_derivative(const GammaRep& rep, const Connection& nabla, const Spinor16<double>& eta, int i);
Spinor16<double> spinor_derivative(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                                   int i);

struct DiracData {
  Spinor16<double> d_eta;
  Vec8<double> v;  // D eta = V eta
};

DiracData dirac(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta);

// Gamma(e_i) = 2 c^{-1}(nabla_{e_i} eta).
KForm<double> intrinsic_torsion(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                                int i);

struct TorsionFlags {
  bool parallel = false;
  bool lcp = false;
  bool balanced = false;
  bool mixed = false;
};

struct TorsionResiduals {
  double parallel = 0.0;   // max_i |nabla_i eta|
  double lcp = 0.0;        // |i(V)Omega - 28 alt|
  double balanced = 0.0;   // |D eta|
  double dual_path = 0.0;  // max-abs difference of the two *dOmega computations
};

struct TorsionReport {
  Spin7Form<double> omega;
  Vec8<double> v{};
  KForm<double> alt_term{3};  // alt(c^{-1} nabla eta)
  KForm<double> gamma8{3};
  KForm<double> gamma48{3};
  KForm<double> theta{1};
  KForm<double> star_d_omega{3};     // spinorial 2(gamma8 - 12 alt)
  KForm<double> star_d_omega_ce{3};  // hodge(ce_differential(Omega))
  TorsionFlags flags;
  TorsionResiduals residuals;
  double tolerance = 0.0;
};

// Spinorial *dOmega with Chevalley-Eilenberg cross-check; flags use the given tolerance.
// Throws InconsistencyError if the two routes differ by more than tol * max(1, max|c_ij^k|).
TorsionReport star_d_omega(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                           double tol = 1e-9);

// max_i |nabla_i eta + 1/4 (i(e_i) T) eta|.
double characteristic_check(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta,
                            const KForm<double>& torsion);

// theta with pr_{Lambda^5_8}(dOmega) = theta ^ Omega.
KForm<double> lee_form_from_d_omega(const Spin7Form<double>& omega, const KForm<double>& d_omega);

// r(i, j, k) = R(e_i, e_j) e_k with R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}.
struct Curvature {
  std::array<Vec8<double>, 512> r{};
  const Vec8<double>& operator()(int i, int j, int k) const { return r[static_cast<std::size_t>((i * 8 + j) * 8 + k)]; }
  Vec8<double>& operator()(int i, int j, int k) { return r[static_cast<std::size_t>((i * 8 + j) * 8 + k)]; }
  double max_abs() const;
};

Curvature curvature(const LieAlgebra8<double>& g);

double bianchi_defect(const Curvature& r);

double difference(const Curvature& a, const Curvature& b);

}  // namespace spin7
