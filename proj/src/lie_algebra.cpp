#include "spin7/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace spin7 {

template <class T>
LieAlgebra8<T>::LieAlgebra8() {
  c_.fill(T(0));
}

template <class T>
LieAlgebra8<T> LieAlgebra8<T>::from_constants(const Constants& c, double tol) {
  LieAlgebra8 g;
  g.c_ = c;
  const double limit = ScalarTraits<T>::exact ? 0.0 : tol;
  if (g.antisymmetry_defect() > limit) throw InputError("structure constants are not antisymmetric");
  if (g.jacobi_defect() > limit) throw InputError("structure constants violate the Jacobi identity");
  return g;
}

template <class T>
LieAlgebra8<T> LieAlgebra8<T>::from_brackets(const std::vector<Bracket<T>>& brackets, double tol) {
  Constants c;
  c.fill(T(0));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& b : brackets) {
    if (b.i < 0 || b.i >= kDim || b.j < 0 || b.j >= kDim || b.k < 0 || b.k >= kDim)
      throw InputError("bracket index out of range 0..7");
    if (b.i == b.j) throw InputError("bracket [e_i, e_i] must vanish");
    if (!seen.insert({std::min(b.i, b.j), std::max(b.i, b.j), b.k}).second)
      throw InputError("duplicate bracket entry");
    c[index(b.i, b.j, b.k)] += b.c;
    c[index(b.j, b.i, b.k)] -= b.c;
  }
  return from_constants(c, tol);
}

template <class T>
Vec8<T> LieAlgebra8<T>::bracket(int i, int j) const {
  Vec8<T> v;
  for (int k = 0; k < kDim; ++k) v[k] = c(i, j, k);
  return v;
}

template <class T>
Vec8<T> LieAlgebra8<T>::bracket(const Vec8<T>& x, const Vec8<T>& y) const {
  Vec8<T> v = zero_vec8<T>();
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kDim; ++j) {
      if (is_zero(y[j])) continue;
      const T xy = x[i] * y[j];
      for (int k = 0; k < kDim; ++k) v[k] += xy * c(i, j, k);
    }
  }
  return v;
}

template <class T>
double LieAlgebra8<T>::antisymmetry_defect() const {
  double m = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) m = std::max(m, std::fabs(to_double(T(c(i, j, k) + c(j, i, k)))));
  return m;
}

template <class T>
double LieAlgebra8<T>::jacobi_defect() const {
  // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j]
  double m = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int l = j + 1; l < kDim; ++l)
        for (int k = 0; k < kDim; ++k) {
          T s(0);
          for (int p = 0; p < kDim; ++p)
            s += c(i, j, p) * c(p, l, k) + c(j, l, p) * c(p, i, k) + c(l, i, p) * c(p, j, k);
          m = std::max(m, std::fabs(to_double(s)));
        }
  return m;
}

template <class T>
bool LieAlgebra8<T>::unimodular(double tol) const {
  for (int j = 0; j < kDim; ++j) {
    T tr(0);
    for (int i = 0; i < kDim; ++i) tr += c(j, i, i);
    if (std::fabs(to_double(tr)) > tol) return false;
    if (ScalarTraits<T>::exact && tol == 0.0 && !is_zero(tr)) return false;
  }
  return true;
}

template <class T>
KForm<T> ce_differential(const LieAlgebra8<T>& g, const KForm<T>& b) {
  const int k = b.degree();
  if (k >= kDim) return KForm<T>(kDim);
  KForm<T> out(k + 1);
  if (b.is_zero() || k == 0) return out;
  std::vector<int> args(static_cast<std::size_t>(k));
  for (MultiIndex idx : multi_indices(k + 1)) {
    const auto x = idx.axes();
    T total(0);
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        std::size_t pos = 1;
        for (int r = 0; r <= k; ++r)
          if (r != p && r != q) args[pos++] = x[r];
        T term(0);
        for (int m = 0; m < kDim; ++m) {
          const T& cm = g.c(x[p], x[q], m);
          if (is_zero(cm)) continue;
          args[0] = m;
          term += cm * b.value(args);
        }
        if ((p + q) % 2) total -= term; else total += term;
      }
    out.add(idx, total);
  }
  return out;
}

template <class T>
KForm<T> codifferential(const LieAlgebra8<T>& g, const KForm<T>& b) {
  if (b.degree() == 0) return KForm<T>(0);
  return -hodge(ce_differential(g, hodge(b)));
}

template class LieAlgebra8<double>;
template class LieAlgebra8<Rational>;
template KForm<double> ce_differential(const LieAlgebra8<double>&, const KForm<double>&);
template KForm<Rational> ce_differential(const LieAlgebra8<Rational>&, const KForm<Rational>&);
template KForm<double> codifferential(const LieAlgebra8<double>&, const KForm<double>&);
template KForm<Rational> codifferential(const LieAlgebra8<Rational>&, const KForm<Rational>&);

}  // namespace spin7
