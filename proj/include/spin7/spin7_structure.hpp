#pragma once

// Spin(7) structure on R^8 determined by a unit spinor of Delta+.
//
// Omega(W,X,Y,Z) = -(WXYZ eta, eta) on orthonormal arguments, and the triple cross
// product is fixed by (X x Y x Z) eta = (X^Y^Z) eta. Together these give
// g(X x Y x Z, W) = -Omega(X,Y,Z,W), so a frame with Omega = e^{0123} + ... has
// e_0 x e_1 x e_2 = -e_3.

#include <array>

#include "spin7/clifford.hpp"
#include "spin7/lie_algebra.hpp"
#include "spin7/linalg.hpp"

namespace spin7 {

template <class T>
struct Spin7Form {
  KForm<T> omega;
  Spinor16<T> eta;
};

// The 14-term Cayley-frame pattern
//   e^{0123}-e^{0145}-e^{0167}-e^{0246}+e^{0257}-e^{0347}-e^{0356}
//   +e^{4567}-e^{2367}-e^{2345}-e^{1357}+e^{1346}-e^{1256}-e^{1247}.
template <class T>
KForm<T> cayley_omega();

// Requires eta in Delta+ with |eta| = 1 (exact for rationals, 1e-12 otherwise).
template <class T>
Spin7Form<T> omega_from_spinor(const GammaRep& rep, const Spinor16<T>& eta);

template <class T>
Vec8<T> triple_cross(const GammaRep& rep, const Spinor16<T>& eta, const Vec8<T>& x, const Vec8<T>& y,
                     const Vec8<T>& z);

struct CayleyFrame {
  std::array<Vec8<double>, 8> e;
};

// Completes orthonormal e0, e1, e2, e4 (e4 orthogonal to e0 x e1 x e2) so that Omega takes the
// 14-term pattern in the returned frame. Throws ConventionError if the check fails.
CayleyFrame cayley_frame(const GammaRep& rep, const Spinor16<double>& eta, const Vec8<double>& e0,
                         const Vec8<double>& e1, const Vec8<double>& e2, const Vec8<double>& e4,
                         double tol = 1e-10);

// Omega expressed in the frame: coefficient of e^{abcd} is Omega(e_a, e_b, e_c, e_d).
KForm<double> omega_in_frame(const KForm<double>& omega, const CayleyFrame& frame);

// (e_0 ... e_7) eta for the frame vectors.
Spinor16<double> frame_volume_action(const GammaRep& rep, const CayleyFrame& frame, const Spinor16<double>& eta);

template <class T>
struct Split2 {
  KForm<T> b7;
  KForm<T> b21;
};

template <class T>
struct Split3 {
  KForm<T> b8;
  KForm<T> b48;
};

// b -> *(b ^ Omega) on 2-forms.
template <class T>
KForm<T> lambda2_operator(const KForm<T>& omega, const KForm<T>& b);

template <class T>
Split2<T> project2(const Spin7Form<T>& omega, const KForm<T>& b);

template <class T>
Split3<T> project3(const Spin7Form<T>& omega, const KForm<T>& b);

// Coefficients x with project3(b).b8 = i(x) Omega.
template <class T>
Vec8<T> lambda3_8_vector(const Spin7Form<T>& omega, const KForm<T>& b);

// c(b) = b eta. With check = true, b must lie in Lambda^2_7 (exact) or have a Lambda^2_21
// part below tol.
template <class T>
Spinor16<T> c_map(const GammaRep& rep, const Spin7Form<T>& omega, const KForm<T>& b, bool check = true,
                  double tol = 1e-9);

// c^{-1}(phi)(X,Y) = (1/4)(phi, (XY + g(X,Y)) eta), for phi in Delta+ orthogonal to eta.
template <class T>
KForm<T> c_inverse(const GammaRep& rep, const Spinor16<T>& eta, const Spinor16<T>& phi, double tol = 1e-9);

// Xi(Theta(b)) = sum_j e^j ^ p7(i(e_j) b).
template <class T>
KForm<T> theta_xi(const Spin7Form<T>& omega, const KForm<T>& b);

// Derivation action of E_ab = e_a e_b^T - e_b e_a^T in so(8) on forms.
template <class T>
KForm<T> so8_action(int a, int b, const KForm<T>& form);

// dim { A in so(8) : A . Omega = 0 }.
template <class T>
int stabilizer_dimension(const KForm<T>& omega);

// T = -delta(Omega) - (7/6) *(theta ^ Omega), cross-checked against *dOmega - (4/3) i(V) Omega
// with V = (7/8) theta. Throws InconsistencyError when the two disagree beyond tol.
template <class T>
KForm<T> characteristic_torsion(const Spin7Form<T>& omega, const KForm<T>& star_d_omega, const KForm<T>& theta,
                                const LieAlgebra8<T>& g, double tol = 1e-9);

template <class T>
Vec8<T> vector_of(const KForm<T>& one_form);

}  // namespace spin7
