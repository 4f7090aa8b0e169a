#pragma once

// Real Clifford modules built from octonion left multiplication.
//
// Convention: v^2 = -|v|^2. Spinors live in R^16 = Delta+ (first 8 entries) + Delta- (last 8).
//
// Octonion table: e_0 = 1, e_i^2 = -1, and for each Fano triple (a, b, c) below
// e_a e_b = e_c (cyclically), e_b e_a = -e_c:
//   (1,3,2) (1,4,5) (1,6,7) (2,4,6) (2,7,5) (3,4,7) (3,5,6)
// With this table the standard basis is a Cayley frame for the spinor e_0 of Delta+.

#include <array>
#include <string>

#include "spin7/exterior.hpp"

namespace spin7 {

using IntMat8 = std::array<std::array<int, 8>, 8>;
using IntMat16 = std::array<std::array<int, 16>, 16>;

template <class T>
using Spinor16 = std::array<T, 16>;

inline constexpr std::array<std::array<int, 3>, 7> kFanoTriples{{
    {1, 3, 2}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 7, 5}, {3, 4, 7}, {3, 5, 6}}};

// Octonion product of basis units: e_a e_b = sign * e_index.
struct UnitProduct {
  int sign;
  int index;
};
UnitProduct octonion_unit_product(int a, int b);

struct Cl7Rep {
  int theta;                 // +1 or -1
  std::array<IntMat8, 7> L;  // L[i-1] represents e_i
  IntMat8 volume() const;    // L_1 ... L_7
};

// L_i = s * (left multiplication by e_i), with the global sign s fixed so that
// the volume element L_1...L_7 acts as theta * Id.
Cl7Rep build_octonion_rep(int theta);

struct GammaRep {
  std::array<IntMat16, 8> gamma;
  IntMat16 nu8;
  // Which normalization produced nu8 = diag(+Id, -Id); reported in metadata.
  bool gamma0_flipped = false;
  // Volume sign of the Cl(7) module induced on Delta+ by X -> gamma_0 X.
  int induced_cl7_theta = 0;
};

// gamma_0 = [[0,-I],[I,0]], gamma_j = [[0,L_j],[L_j,0]] with plain octonion left multiplication.
GammaRep build_cl8_rep();

IntMat16 mat_mul(const IntMat16& a, const IntMat16& b);
IntMat8 mat_mul(const IntMat8& a, const IntMat8& b);
IntMat16 identity16();
IntMat8 identity8();

template <class T>
Spinor16<T> zero_spinor() {
  Spinor16<T> s;
  s.fill(T(0));
  return s;
}

// e_0 of Delta+: the octonion 1.
template <class T>
Spinor16<T> base_spinor() {
  Spinor16<T> s = zero_spinor<T>();
  s[0] = T(1);
  return s;
}

template <class T>
Spinor16<T> embed_positive(const std::array<T, 8>& x) {
  Spinor16<T> s = zero_spinor<T>();
  for (int i = 0; i < 8; ++i) s[i] = x[i];
  return s;
}

template <class T>
std::array<T, 8> positive_part(const Spinor16<T>& s) {
  std::array<T, 8> x;
  for (int i = 0; i < 8; ++i) x[i] = s[i];
  return x;
}

template <class T>
Spinor16<T> apply(const IntMat16& m, const Spinor16<T>& s);

template <class T>
std::array<T, 8> apply(const IntMat8& m, const std::array<T, 8>& x);

template <class T>
T spinor_inner(const Spinor16<T>& a, const Spinor16<T>& b);

template <class T>
double spinor_norm(const Spinor16<T>& a);

template <class T>
Spinor16<T> spinor_add(const Spinor16<T>& a, const Spinor16<T>& b, const T& cb = T(1));

template <class T>
Spinor16<T> spinor_scale(const Spinor16<T>& a, const T& s);

// Largest |component| of the Delta- (resp. Delta+) block.
template <class T>
double negative_block_max(const Spinor16<T>& s);
template <class T>
double positive_block_max(const Spinor16<T>& s);

template <class T>
Spinor16<T> gamma_apply(const GammaRep& rep, int i, const Spinor16<T>& s) {
  return apply(rep.gamma[static_cast<std::size_t>(i)], s);
}

// (sum_i x_i gamma_i) s
template <class T>
Spinor16<T> clifford_mul(const GammaRep& rep, const Vec8<T>& x, const Spinor16<T>& s);

// Action of a form on spinors: e^{i1..ik} acts as gamma_{i1} ... gamma_{ik}.
template <class T>
Spinor16<T> form_action(const GammaRep& rep, const KForm<T>& b, const Spinor16<T>& s);

// n (x s): the induced Cl(7) action on Delta+. Requires |n| = 1, x . n = 0, s in Delta+
// (exactly for rationals, to `tol` for doubles).
template <class T>
Spinor16<T> dist_clifford(const GammaRep& rep, const Vec8<T>& n, const Vec8<T>& x, const Spinor16<T>& s,
                          double tol = 1e-12);

// The vector v with v eta = phi (orthogonal projection onto the image of x -> x eta).
template <class T>
Vec8<T> solve_clifford_vector(const GammaRep& rep, const Spinor16<T>& eta, const Spinor16<T>& phi);

std::string chirality_convention();

}  // namespace spin7
