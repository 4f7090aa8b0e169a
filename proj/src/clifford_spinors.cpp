#include <algorithm>
#include <cmath>

#include "spin7/clifford.hpp"

namespace spin7 {

UnitProduct octonion_unit_product(int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7) throw PreconditionError("octonion unit index out of range");
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const auto& t : kFanoTriples)
    for (int r = 0; r < 3; ++r) {
      const int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
      if (a == x && b == y) return {1, z};
      if (a == y && b == x) return {-1, z};
    }
  throw ConventionError("octonion table does not cover a pair of units");
}

IntMat8 identity8() {
  IntMat8 m{};
  for (int i = 0; i < 8; ++i) m[i][i] = 1;
  return m;
}

IntMat16 identity16() {
  IntMat16 m{};
  for (int i = 0; i < 16; ++i) m[i][i] = 1;
  return m;
}

IntMat8 mat_mul(const IntMat8& a, const IntMat8& b) {
  IntMat8 c{};
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k)
      if (a[i][k])
        for (int j = 0; j < 8; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMat16 mat_mul(const IntMat16& a, const IntMat16& b) {
  IntMat16 c{};
  for (int i = 0; i < 16; ++i)
    for (int k = 0; k < 16; ++k)
      if (a[i][k])
        for (int j = 0; j < 16; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMat8 Cl7Rep::volume() const {
  IntMat8 v = identity8();
  for (const auto& m : L) v = mat_mul(v, m);
  return v;
}

namespace {

IntMat8 left_multiplication(int i) {
  IntMat8 m{};
  for (int j = 0; j < 8; ++j) {
    const auto p = octonion_unit_product(i, j);
    m[p.index][j] = p.sign;
  }
  return m;
}

int scalar_sign(const IntMat8& m) {
  if (m == identity8()) return 1;
  IntMat8 neg = identity8();
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  if (m == neg) return -1;
  return 0;
}

int scalar_sign(const IntMat16& m, bool split) {
  IntMat16 d = identity16();
  if (split)
    for (int i = 8; i < 16; ++i) d[i][i] = -1;
  if (m == d) return 1;
  for (auto& row : d)
    for (auto& x : row) x = -x;
  if (m == d) return -1;
  return 0;
}

}  // namespace

Cl7Rep build_octonion_rep(int theta) {
  if (theta != 1 && theta != -1) throw PreconditionError("theta must be +1 or -1");
  Cl7Rep rep;
  rep.theta = theta;
  for (int i = 1; i <= 7; ++i) rep.L[i - 1] = left_multiplication(i);
  const int v = scalar_sign(rep.volume());
  if (v == 0) throw ConventionError("octonion volume element is not a multiple of the identity");
  // An odd number of factors: rescaling every L_i by s rescales the volume by s.
  const int s = theta * v;
  if (s < 0)
    for (auto& m : rep.L)
      for (auto& row : m)
        for (auto& x : row) x = -x;
  if (scalar_sign(rep.volume()) != theta) throw ConventionError("volume normalization failed");
  return rep;
}

GammaRep build_cl8_rep() {
  GammaRep rep{};
  rep.gamma[0] = IntMat16{};
  for (int r = 0; r < 8; ++r) {
    rep.gamma[0][r][8 + r] = -1;
    rep.gamma[0][8 + r][r] = 1;
  }
  for (int i = 1; i <= 7; ++i) {
    const IntMat8 L = left_multiplication(i);
    IntMat16 g{};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        g[r][8 + c] = L[r][c];
        g[8 + r][c] = L[r][c];
      }
    rep.gamma[i] = g;
  }
  auto volume = [&rep] {
    IntMat16 v = identity16();
    for (const auto& g : rep.gamma) v = mat_mul(v, g);
    return v;
  };
  rep.nu8 = volume();
  int s = scalar_sign(rep.nu8, true);
  if (s == -1) {
    // Reversing the orientation of gamma_0 flips nu8.
    for (auto& row : rep.gamma[0])
      for (auto& x : row) x = -x;
    rep.gamma0_flipped = true;
    rep.nu8 = volume();
    s = scalar_sign(rep.nu8, true);
  }
  if (s != 1) throw ConventionError("nu8 is not diag(+Id, -Id)");

  // Induced module on Delta+: X_j -> (gamma_0 gamma_j) restricted to the top block.
  IntMat8 vol = identity8();
  for (int j = 1; j <= 7; ++j) {
    const IntMat16 p = mat_mul(rep.gamma[0], rep.gamma[j]);
    IntMat8 top{};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) top[r][c] = p[r][c];
    vol = mat_mul(vol, top);
  }
  rep.induced_cl7_theta = scalar_sign(vol);
  if (rep.induced_cl7_theta == 0) throw ConventionError("induced Cl(7) volume is not scalar");
  return rep;
}

template <class T>
Spinor16<T> apply(const IntMat16& m, const Spinor16<T>& s) {
  Spinor16<T> out = zero_spinor<T>();
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) {
      const int e = m[r][c];
      if (e == 0 || is_zero(s[c])) continue;
      if (e == 1) out[r] += s[c];
      else if (e == -1) out[r] -= s[c];
      else out[r] += T(e) * s[c];
    }
  return out;
}

template <class T>
std::array<T, 8> apply(const IntMat8& m, const std::array<T, 8>& x) {
  std::array<T, 8> out;
  out.fill(T(0));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (m[r][c]) out[r] += T(m[r][c]) * x[c];
  return out;
}

template <class T>
T spinor_inner(const Spinor16<T>& a, const Spinor16<T>& b) {
  T s(0);
  for (int i = 0; i < 16; ++i) s += a[i] * b[i];
  return s;
}

template <class T>
double spinor_norm(const Spinor16<T>& a) {
  return std::sqrt(std::max(0.0, to_double(spinor_inner(a, a))));
}

template <class T>
Spinor16<T> spinor_add(const Spinor16<T>& a, const Spinor16<T>& b, const T& cb) {
  Spinor16<T> out = a;
  for (int i = 0; i < 16; ++i) out[i] += cb * b[i];
  return out;
}

template <class T>
Spinor16<T> spinor_scale(const Spinor16<T>& a, const T& s) {
  Spinor16<T> out = a;
  for (auto& x : out) x *= s;
  return out;
}

template <class T>
double negative_block_max(const Spinor16<T>& s) {
  double m = 0.0;
  for (int i = 8; i < 16; ++i) m = std::max(m, std::fabs(to_double(s[i])));
  return m;
}

template <class T>
double positive_block_max(const Spinor16<T>& s) {
  double m = 0.0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::fabs(to_double(s[i])));
  return m;
}

template <class T>
Spinor16<T> clifford_mul(const GammaRep& rep, const Vec8<T>& x, const Spinor16<T>& s) {
  Spinor16<T> out = zero_spinor<T>();
  for (int i = 0; i < 8; ++i) {
    if (is_zero(x[i])) continue;
    out = spinor_add(out, gamma_apply(rep, i, s), x[i]);
  }
  return out;
}

template <class T>
Spinor16<T> form_action(const GammaRep& rep, const KForm<T>& b, const Spinor16<T>& s) {
  Spinor16<T> out = zero_spinor<T>();
  for (const auto& [idx, c] : b.terms()) {
    Spinor16<T> v = s;
    const auto axes = idx.axes();
    for (auto it = axes.rbegin(); it != axes.rend(); ++it) v = gamma_apply(rep, *it, v);
    out = spinor_add(out, v, c);
  }
  return out;
}

template <class T>
Spinor16<T> dist_clifford(const GammaRep& rep, const Vec8<T>& n, const Vec8<T>& x, const Spinor16<T>& s,
                          double tol) {
  T nn(0), nx(0);
  for (int i = 0; i < 8; ++i) {
    nn += n[i] * n[i];
    nx += n[i] * x[i];
  }
  const bool exact = ScalarTraits<T>::exact;
  const double du = std::fabs(to_double(T(nn - T(1))));
  const double dx = std::fabs(to_double(nx));
  const double dn = negative_block_max(s);
  const bool bad = exact ? (!is_zero(T(nn - T(1))) || !is_zero(nx) || dn != 0.0) : (du > tol || dx > tol || dn > tol);
  if (bad) throw PreconditionError("dist_clifford needs |n| = 1, x orthogonal to n and s in Delta+");
  return clifford_mul(rep, n, clifford_mul(rep, x, s));
}

template <class T>
Vec8<T> solve_clifford_vector(const GammaRep& rep, const Spinor16<T>& eta, const Spinor16<T>& phi) {
  const T n2 = spinor_inner(eta, eta);
  if (is_zero(n2)) throw PreconditionError("zero spinor");
  Vec8<T> v;
  for (int i = 0; i < 8; ++i) v[i] = spinor_inner(gamma_apply(rep, i, eta), phi) / n2;
  return v;
}

std::string chirality_convention() {
  return "nu8 = gamma_0...gamma_7 = diag(+Id8, -Id8); Delta+ = first 8 components carries the Cl(7) module "
         "X -> gamma_0 X with volume +Id";
}

#define SPIN7_INSTANTIATE(T)                                                                          \
  template Spinor16<T> apply(const IntMat16&, const Spinor16<T>&);                                    \
  template std::array<T, 8> apply(const IntMat8&, const std::array<T, 8>&);                           \
  template T spinor_inner(const Spinor16<T>&, const Spinor16<T>&);                                    \
  template double spinor_norm(const Spinor16<T>&);                                                    \
  template Spinor16<T> spinor_add(const Spinor16<T>&, const Spinor16<T>&, const T&);                  \
  template Spinor16<T> spinor_scale(const Spinor16<T>&, const T&);                                    \
  template double negative_block_max(const Spinor16<T>&);                                             \
  template double positive_block_max(const Spinor16<T>&);                                             \
  template Spinor16<T> clifford_mul(const GammaRep&, const Vec8<T>&, const Spinor16<T>&);             \
  template Spinor16<T> form_action(const GammaRep&, const KForm<T>&, const Spinor16<T>&);             \
  template Spinor16<T> dist_clifford(const GammaRep&, const Vec8<T>&, const Vec8<T>&, const Spinor16<T>&, \
                                     double);                                                         \
  template Vec8<T> solve_clifford_vector(const GammaRep&, const Spinor16<T>&, const Spinor16<T>&);

SPIN7_INSTANTIATE(double)
SPIN7_INSTANTIATE(Rational)

#undef SPIN7_INSTANTIATE

}  // namespace spin7
