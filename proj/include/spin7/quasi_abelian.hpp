#pragma once

// Quasi-abelian Lie algebras R e_0 + R^7 with [e_0, X] = E X and R^7 abelian.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spin7/g2_frame.hpp"

namespace spin7 {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec8d = Eigen::Matrix<double, 8, 1>;

struct QAAlgebra {
  Mat7 e = Mat7::Zero();

  Mat7 e13() const { return 0.5 * (e + e.transpose()); }
  Mat7 e24() const { return 0.5 * (e - e.transpose()); }
  double trace() const { return e.trace(); }
  LieAlgebra8<double> algebra() const;
};

// Throws InputError on non-finite entries.
QAAlgebra make_qa(const Mat7& e);

struct SkewNormalForm {
  std::array<double, 3> lambdas{};  // ascending
  Mat7 basis = Mat7::Identity();    // columns v1, w1, v2, w2, v3, w3, u; positively oriented
  // basis^T e24 basis: blocks [[0, -l], [l, 0]] on (v_a, w_a), zero on u.
  Mat7 model() const;
};

SkewNormalForm skew_normal_form(const Mat7& e24, double skew_tol = 1e-12);

double det_formula(double l1, double l2, double l3);

struct SpinorKernel {
  // sum_{i<j} B_ij rho(X_i) rho(X_j) with B the model matrix, in the ordering
  // X_1 = u, (X_2, X_3) = (v1, w1), (X_4, X_5) = (v2, w2), (X_6, X_7) = (v3, w3).
  Mat8 model_matrix = Mat8::Zero();
  double model_det = 0.0;
  int model_kernel_dim = 0;
  // Same expression with e24 in the standard frame; this is the action on Delta+.
  Mat8 frame_matrix = Mat8::Zero();
  double frame_det = 0.0;
  std::vector<Vec8d> kernel;  // orthonormal kernel of frame_matrix
  std::array<double, 8> singular_values{};
};

// Singular values below tol * max(1, sigma_max) count as kernel.
SpinorKernel spinor_kernel(const Cl7Rep& cl7, const Mat7& e24, double tol = 1e-9);

enum class Verdict { No, Yes, Unknown };
std::string to_string(Verdict v);

struct QAWitness {
  std::string flag;
  Spinor16<double> eta{};
  TorsionFlags flags;
  TorsionResiduals residuals;
};

struct QAReport {
  Mat7 e = Mat7::Zero();
  SkewNormalForm normal_form;
  double lambda_defect = 0.0;  // |l3 - l1 - l2|
  bool lambda_condition = false;
  bool abelian = false;
  std::string note;
  bool admits_parallel = false;
  bool admits_lcp_nonparallel = false;
  bool admits_balanced = false;
  Verdict admits_mixed = Verdict::No;
  std::optional<double> h;  // set when E13 = h Id
  double trace = 0.0;
  bool unimodular = false;
  double det_value = 0.0;
  double det_formula_value = 0.0;
  int kernel_dim = 0;
  std::vector<QAWitness> witnesses;
  bool flat = false;
  double max_curvature = 0.0;
  double tolerance = 0.0;
  double witness_tolerance = 0.0;
};

// Flags from the skew normal form of E; every positive flag carries a witness spinor whose torsion
// flags (at witness_tolerance = 10 tol (1 + |E|_F)) are re-checked. Throws InconsistencyError
// when a witness does not confirm its flag.
QAReport classify_qa(const GammaRep& rep, const Mat7& e, double tol = 1e-9);

// Closed formulas, with the G2 decomposition of E against Psi = i(e_0) Omega_eta
// (E-vec = svec, E3 = s3, h = tr E / 7):
//   c48 = (2/7)(-6 i(E-vec)(e^0^Psi) + (9/2) i(E-vec) *_7 Psi) + 3 beta3(E3)
//   c8  = i((12/7) E-vec - 4h e_0)(e^0^Psi + *_7 Psi)
PureComponents clasiqab_closed_form(const GammaRep& rep, const Mat7& e, const Spinor16<double>& eta);

// Closed form, cross-checked against project3 of the spinorial *dOmega.
PureComponents clasiqab_components(const GammaRep& rep, const Mat7& e, const Spinor16<double>& eta,
                                   double tol = 1e-9);

// R(e0,ej)e0 = (E13^2 + [E13,E24]) e_j, R(e0,ej)ek = -((E13^2 + [E13,E24]))_{kj} e0,
// R(ei,ej)e0 = 0, R(ei,ej)ek = (E13)_{ik} E13 e_j - (E13)_{jk} E13 e_i.
Curvature qa_curvature_closed_form(const Mat7& e);

// diag(1, exp(tE)).
Mat8 exp_tE(const Mat7& e, double t);

// True when tr E = 0: the algebra is unimodular, which rules out lcp structures that are not parallel.
bool solv_obstruction(const Mat7& e, double tol = 1e-9);

Mat7 nilpotent_example();
Mat7 rotation_example();

// Salamon notation (de^0, ..., de^7), e.g. "(0,02,2*03,0,05,06,07,0)".
std::string structure_equations(const LieAlgebra8<double>& g, double tol = 1e-12);

}  // namespace spin7
