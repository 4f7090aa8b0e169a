#pragma once

#include <doctest.h>

#include <random>

#include "spin7/suite.hpp"

namespace spin7::testing {

// Sparse random form with small integer coefficients.
inline KForm<Rational> random_form(std::mt19937_64& gen, int degree, int terms = 4) {
  const auto all = multi_indices(degree);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  KForm<Rational> b(degree);
  for (int t = 0; t < terms; ++t) b.add(all[pick(gen)], Rational(coeff(gen)));
  return b;
}

inline KForm<double> random_dense_form(Sampler& s, int degree) {
  KForm<double> b(degree);
  for (const auto& idx : multi_indices(degree)) b.add(idx, s.uniform());
  return b;
}

inline Vec8<double> random_vec(Sampler& s) {
  Vec8<double> v;
  for (auto& x : v) x = s.uniform();
  return v;
}

inline Spinor16<double> random_spinor(Sampler& s) {
  Spinor16<double> v;
  for (auto& x : v) x = s.uniform();
  return v;
}

inline double max_diff(const Spinor16<double>& a, const Spinor16<double>& b) {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

inline double max_diff(const Vec8<double>& a, const Vec8<double>& b) {
  double m = 0.0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

// Sign of the permutation sending `p` to sorted order, by counting inversions.
inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

inline const GammaRep& rep() {
  static const GammaRep r = build_cl8_rep();
  return r;
}

}  // namespace spin7::testing
