#pragma once

// Eight-dimensional metric Lie algebras in an orthonormal frame e_0..e_7.
// c(i, j, k) is the coefficient of e_k in [e_i, e_j].

#include <array>
#include <vector>

#include "spin7/exterior.hpp"

namespace spin7 {

template <class T>
struct Bracket {
  int i;
  int j;
  int k;
  T c;
};

template <class T>
class LieAlgebra8 {
 public:
  using Constants = std::array<T, kDim * kDim * kDim>;

  // The abelian algebra.
  LieAlgebra8();

  // Validates antisymmetry and the Jacobi identity, up to `tol` in max-abs for the float backend
  // (exactly for rationals). Throws InputError on failure.
  static LieAlgebra8 from_constants(const Constants& c, double tol = 1e-9);

  // Each entry sets [e_i, e_j] += c e_k together with the antisymmetric partner.
  // The same (unordered pair, k) may not appear twice.
  static LieAlgebra8 from_brackets(const std::vector<Bracket<T>>& brackets, double tol = 1e-9);

  const T& c(int i, int j, int k) const { return c_[index(i, j, k)]; }
  const Constants& constants() const { return c_; }

  Vec8<T> bracket(int i, int j) const;
  Vec8<T> bracket(const Vec8<T>& x, const Vec8<T>& y) const;

  double jacobi_defect() const;
  double antisymmetry_defect() const;
  // tr ad(e_j) = sum_i c(j, i, i) vanishes for every j.
  bool unimodular(double tol = 0.0) const;

 private:
  static std::size_t index(int i, int j, int k) { return static_cast<std::size_t>((i * kDim + j) * kDim + k); }

  Constants c_;
};

template <class To, class From>
LieAlgebra8<To> algebra_cast(const LieAlgebra8<From>& g) {
  typename LieAlgebra8<To>::Constants c;
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = scalar_cast<To>(g.constants()[n]);
  return LieAlgebra8<To>::from_constants(c, 1e300);
}

// (db)(X0..Xk) = sum_{i<j} (-1)^{i+j} b([Xi,Xj], X0, .., ^i, .., ^j, .., Xk) on invariant forms.
template <class T>
KForm<T> ce_differential(const LieAlgebra8<T>& g, const KForm<T>& b);

// delta = -*d* on every degree (dimension 8).
template <class T>
KForm<T> codifferential(const LieAlgebra8<T>& g, const KForm<T>& b);

}  // namespace spin7
