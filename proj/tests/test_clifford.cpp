#include <Eigen/Dense>

#include "helpers.hpp"

using namespace spin7;
using spin7::testing::max_diff;
using spin7::testing::random_spinor;
using spin7::testing::random_vec;
using spin7::testing::rep;

namespace {

std::array<double, 8> octonion_product(const std::array<double, 8>& x, const std::array<double, 8>& y) {
  std::array<double, 8> z{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const UnitProduct p = octonion_unit_product(a, b);
      z[p.index] += p.sign * x[a] * y[b];
    }
  return z;
}

double norm(const std::array<double, 8>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

template <class M>
M transpose(const M& m) {
  M t = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
  return t;
}

Vec8<double> basis(int i) { return basis_vec8<double>(i); }

}  // namespace

TEST_CASE("octonion table is a normed division algebra") {
  for (const auto& t : kFanoTriples) {
    const UnitProduct p = octonion_unit_product(t[0], t[1]);
    CHECK(p.sign == 1);
    CHECK(p.index == t[2]);
    const UnitProduct q = octonion_unit_product(t[1], t[0]);
    CHECK(q.sign == -1);
  }
  for (int a = 1; a < 8; ++a) {
    const UnitProduct p = octonion_unit_product(a, a);
    CHECK(p.index == 0);
    CHECK(p.sign == -1);
  }
  Sampler s(1);
  for (int t = 0; t < 50; ++t) {
    std::array<double, 8> x, y;
    for (auto& v : x) v = s.uniform();
    for (auto& v : y) v = s.uniform();
    CHECK(norm(octonion_product(x, y)) == doctest::Approx(norm(x) * norm(y)).epsilon(1e-13));
  }
}

TEST_CASE("Cl(7) representations") {
  for (int theta : {1, -1}) {
    const Cl7Rep r = build_octonion_rep(theta);
    CHECK(r.theta == theta);
    IntMat8 vol = identity8();
    for (int i = 0; i < 7; ++i) {
      const IntMat8& l = r.L[i];
      IntMat8 neg = l;
      for (auto& row : neg)
        for (auto& x : row) x = -x;
      CHECK(transpose(l) == neg);
      CHECK(mat_mul(transpose(l), l) == identity8());
      for (int j = 0; j < 7; ++j) {
        const IntMat8 a = mat_mul(r.L[i], r.L[j]);
        const IntMat8 b = mat_mul(r.L[j], r.L[i]);
        for (int p = 0; p < 8; ++p)
          for (int q = 0; q < 8; ++q) CHECK(a[p][q] + b[p][q] == (i == j && p == q ? -2 : 0));
      }
      vol = mat_mul(vol, l);
    }
    IntMat8 expected = identity8();
    for (auto& row : expected)
      for (auto& x : row) x *= theta;
    CHECK(vol == expected);
    CHECK(r.volume() == expected);
  }
}

TEST_CASE("Cl(8) representation") {
  const GammaRep& g = rep();
  for (int i = 0; i < 8; ++i) {
    IntMat16 neg = g.gamma[i];
    for (auto& row : neg)
      for (auto& x : row) x = -x;
    CHECK(transpose(g.gamma[i]) == neg);
    CHECK(mat_mul(transpose(g.gamma[i]), g.gamma[i]) == identity16());
    // Off-diagonal blocks only: chirality is swapped.
    for (int p = 0; p < 16; ++p)
      for (int q = 0; q < 16; ++q)
        if ((p < 8) == (q < 8)) CHECK(g.gamma[i][p][q] == 0);
  }
  const int sign = g.gamma0_flipped ? -1 : 1;
  for (int p = 0; p < 8; ++p) {
    CHECK(g.gamma[0][p][p + 8] == -sign);
    CHECK(g.gamma[0][p + 8][p] == sign);
  }
  IntMat16 nu = identity16();
  for (int i = 0; i < 8; ++i) nu = mat_mul(nu, g.gamma[i]);
  CHECK(nu == g.nu8);
  for (int p = 0; p < 16; ++p) CHECK(g.nu8[p][p] == (p < 8 ? 1 : -1));
  CHECK(mat_mul(g.nu8, g.nu8) == identity16());
  CHECK(!g.gamma0_flipped);
  CHECK(g.induced_cl7_theta == 1);
  CHECK(!chirality_convention().empty());
}

TEST_CASE("Clifford multiplication") {
  Sampler s(2);
  const Spinor16<double> eta = base_spinor<double>();
  CHECK(positive_block_max(clifford_mul(rep(), basis(0), eta)) == 0.0);
  CHECK(negative_block_max(clifford_mul(rep(), basis(0), eta)) == 1.0);
  for (int t = 0; t < 30; ++t) {
    const Vec8<double> x = random_vec(s);
    const Spinor16<double> a = random_spinor(s);
    const Spinor16<double> b = random_spinor(s);
    double x2 = 0;
    for (double v : x) x2 += v * v;
    CHECK(max_diff(clifford_mul(rep(), x, clifford_mul(rep(), x, a)), spinor_scale(a, -x2)) < 1e-13);
    CHECK(spinor_inner(clifford_mul(rep(), x, a), b) ==
          doctest::Approx(-spinor_inner(a, clifford_mul(rep(), x, b))).epsilon(1e-13));
  }
}

TEST_CASE("form action") {
  Sampler s(3);
  const GammaRep& g = rep();
  const Spinor16<double> phi = random_spinor(s);
  CHECK(max_diff(form_action(g, KForm<double>::scalar(2.5), phi), spinor_scale(phi, 2.5)) == 0.0);

  for (int t = 0; t < 20; ++t) {
    const Vec8<double> x = random_vec(s);
    const Vec8<double> y = random_vec(s);
    const Vec8<double> z = random_vec(s);
    const auto fx = KForm<double>::one_form(x);
    const auto fy = KForm<double>::one_form(y);
    const auto fz = KForm<double>::one_form(z);
    double gxy = 0, gxz = 0, gyz = 0;
    for (int i = 0; i < 8; ++i) {
      gxy += x[i] * y[i];
      gxz += x[i] * z[i];
      gyz += y[i] * z[i];
    }
    auto mul = [&](const Vec8<double>& v, const Spinor16<double>& p) { return clifford_mul(g, v, p); };
    const Spinor16<double> two = spinor_add(mul(x, mul(y, phi)), phi, gxy);
    CHECK(max_diff(form_action(g, wedge(fx, fy), phi), two) < 1e-12);
    Spinor16<double> three = mul(x, mul(y, mul(z, phi)));
    three = spinor_add(three, mul(z, phi), gxy);
    three = spinor_add(three, mul(y, phi), -gxz);
    three = spinor_add(three, mul(x, phi), gyz);
    CHECK(max_diff(form_action(g, wedge(wedge(fx, fy), fz), phi), three) < 1e-12);

    // (X ^ b) phi = X (b phi) + (i(X) b) phi
    const KForm<double> b = spin7::testing::random_dense_form(s, 1 + t % 4);
    const Spinor16<double> lhs = form_action(g, wedge(fx, b), phi);
    const Spinor16<double> rhs = spinor_add(mul(x, form_action(g, b, phi)), form_action(g, contract(x, b), phi));
    CHECK(max_diff(lhs, rhs) < 1e-11);
  }

  const Spinor16<Rational> eta = base_spinor<Rational>();
  for (const auto& idx : multi_indices(4)) {
    const auto ax = idx.axes();
    Spinor16<Rational> direct = eta;
    for (int p = 3; p >= 0; --p) direct = gamma_apply(g, ax[p], direct);
    CHECK(form_action(g, KForm<Rational>::monomial(idx), eta) == direct);
  }
}

TEST_CASE("induced Cl(7) action on Delta+") {
  Sampler s(4);
  const GammaRep& g = rep();
  const Spinor16<double> eta = embed_positive(positive_part(random_spinor(s)));
  const Vec8<double> n = basis(0);
  for (int t = 0; t < 10; ++t) {
    Vec8<double> x = random_vec(s);
    x[0] = 0.0;
    double x2 = 0;
    for (double v : x) x2 += v * v;
    const Spinor16<double> once = dist_clifford(g, n, x, eta);
    CHECK(negative_block_max(once) == 0.0);
    CHECK(max_diff(dist_clifford(g, n, x, once), spinor_scale(eta, -x2)) < 1e-13);
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      const Spinor16<double> ab = dist_clifford(g, n, basis(i), dist_clifford(g, n, basis(j), eta));
      const Spinor16<double> ba = dist_clifford(g, n, basis(j), dist_clifford(g, n, basis(i), eta));
      CHECK(max_diff(spinor_add(ab, ba), spinor_scale(eta, i == j ? -2.0 : 0.0)) < 1e-13);
    }
  CHECK_THROWS_AS(dist_clifford(g, n, basis(0), eta), PreconditionError);
  Vec8<double> long_n = n;
  long_n[0] = 2.0;
  CHECK_THROWS_AS(dist_clifford(g, long_n, basis(1), eta), PreconditionError);
  CHECK_THROWS_AS(dist_clifford(g, n, basis(1), clifford_mul(g, n, eta)), PreconditionError);
}

TEST_CASE("x -> x eta is an isomorphism onto Delta-") {
  Sampler s(6);
  for (int t = 0; t < 10; ++t) {
    auto p = positive_part(random_spinor(s));
    double nn = 0;
    for (double v : p) nn += v * v;
    for (auto& v : p) v /= std::sqrt(nn);
    const Spinor16<double> eta = embed_positive(p);
    Eigen::Matrix<double, 8, 8> m;
    for (int i = 0; i < 8; ++i) {
      const Spinor16<double> xe = clifford_mul(rep(), basis(i), eta);
      for (int r = 0; r < 8; ++r) m(r, i) = xe[8 + r];
    }
    CHECK(std::fabs(m.determinant()) == doctest::Approx(1.0).epsilon(1e-12));
    const Vec8<double> v = random_vec(s);
    CHECK(max_diff(solve_clifford_vector(rep(), eta, clifford_mul(rep(), v, eta)), v) < 1e-13);
  }
}
