#pragma once

// Small dense linear algebra over either scalar backend (Gaussian elimination).

#include <vector>

#include "spin7/exterior.hpp"

namespace spin7 {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

template <class T>
DenseMatrix<T> dense_zero(std::size_t rows, std::size_t cols) {
  return DenseMatrix<T>(rows, std::vector<T>(cols, T(0)));
}

// Row rank. Exact for rationals; for doubles pivots with |p| <= tol count as zero.
template <class T>
int rank(DenseMatrix<T> m, double tol = 1e-10);

// Solves the square system m x = rhs; throws PreconditionError if singular.
template <class T>
std::vector<T> solve(DenseMatrix<T> m, std::vector<T> rhs, double tol = 1e-14);

// Coordinates of a form in the lexicographic monomial basis of its degree.
template <class T>
std::vector<T> form_coords(const KForm<T>& b);

template <class T>
KForm<T> form_from_coords(int degree, const std::vector<T>& coords);

// Evaluate a k-form on k arbitrary vectors (determinant convention).
template <class T>
T evaluate(const KForm<T>& b, const std::vector<Vec8<T>>& vectors);

}  // namespace spin7
