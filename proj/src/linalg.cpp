#include "spin7/linalg.hpp"

#include <cmath>
#include <utility>

namespace spin7 {

namespace {

template <class T>
bool negligible(const T& x, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)tol;
    return is_zero(x);
  } else {
    return std::fabs(to_double(x)) <= tol;
  }
}

}  // namespace

template <class T>
int rank(DenseMatrix<T> m, double tol) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    double best = std::fabs(to_double(m[r][c]));
    for (std::size_t i = r; i < rows; ++i) {
      if constexpr (ScalarTraits<T>::exact) {
        if (!is_zero(m[i][c])) {
          piv = i;
          break;
        }
      } else {
        const double v = std::fabs(m[i][c]);
        if (v > best) {
          best = v;
          piv = i;
        }
      }
    }
    if (negligible(m[piv][c], tol)) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      const T f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

template <class T>
std::vector<T> solve(DenseMatrix<T> m, std::vector<T> rhs, double tol) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c; i < n; ++i)
      if (std::fabs(to_double(m[i][c])) > std::fabs(to_double(m[piv][c]))) piv = i;
    if (ScalarTraits<T>::exact) {
      for (std::size_t i = c; i < n && is_zero(m[piv][c]); ++i) piv = i;
    }
    if (negligible(m[piv][c], tol)) throw PreconditionError("singular linear system");
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m[i][c])) continue;
      const T f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

template <class T>
std::vector<T> form_coords(const KForm<T>& b) {
  const auto basis = multi_indices(b.degree());
  std::vector<T> out;
  out.reserve(basis.size());
  for (MultiIndex idx : basis) out.push_back(b.coeff(idx));
  return out;
}

template <class T>
KForm<T> form_from_coords(int degree, const std::vector<T>& coords) {
  const auto basis = multi_indices(degree);
  if (coords.size() != basis.size()) throw DegreeError("coordinate vector has the wrong length");
  KForm<T> out(degree);
  for (std::size_t n = 0; n < basis.size(); ++n) out.add(basis[n], coords[n]);
  return out;
}

template <class T>
T evaluate(const KForm<T>& b, const std::vector<Vec8<T>>& vectors) {
  const std::size_t k = vectors.size();
  if (static_cast<int>(k) != b.degree()) throw DegreeError("evaluation arity does not match degree");
  if (k == 0) return b.coeff(MultiIndex{});
  T total(0);
  for (const auto& [idx, c] : b.terms()) {
    const auto axes = idx.axes();
    DenseMatrix<T> m = dense_zero<T>(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = 0; col < k; ++col) m[r][col] = vectors[col][axes[r]];
    // determinant by elimination
    T det(1);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t piv = col;
      for (std::size_t i = col; i < k; ++i)
        if (std::fabs(to_double(m[i][col])) > std::fabs(to_double(m[piv][col]))) piv = i;
      if (ScalarTraits<T>::exact)
        for (std::size_t i = col; i < k && is_zero(m[piv][col]); ++i) piv = i;
      if (is_zero(m[piv][col])) {
        det = T(0);
        break;
      }
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (std::size_t i = col + 1; i < k; ++i) {
        const T f = m[i][col] / m[col][col];
        for (std::size_t j = col; j < k; ++j) m[i][j] -= f * m[col][j];
      }
    }
    total += c * det;
  }
  return total;
}

#define SPIN7_INSTANTIATE(T)                                                     \
  template int rank(DenseMatrix<T>, double);                                     \
  template std::vector<T> solve(DenseMatrix<T>, std::vector<T>, double);         \
  template std::vector<T> form_coords(const KForm<T>&);                          \
  template KForm<T> form_from_coords(int, const std::vector<T>&);                \
  template T evaluate(const KForm<T>&, const std::vector<Vec8<T>>&);

SPIN7_INSTANTIATE(double)
SPIN7_INSTANTIATE(Rational)

#undef SPIN7_INSTANTIATE

}  // namespace spin7
