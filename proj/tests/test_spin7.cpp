#include <Eigen/Dense>

#include "helpers.hpp"

using namespace spin7;
using spin7::testing::max_diff;
using spin7::testing::random_dense_form;
using spin7::testing::random_vec;
using spin7::testing::rep;

namespace {

KForm<Rational> e(std::initializer_list<int> axes) { return KForm<Rational>::monomial(MultiIndex(axes)); }

Spinor16<double> unit_spinor(Sampler& s) { return s.unit_positive_spinor(); }

// Omega(W,X,Y,Z) = 1/2 ((-WXYZ + WZYX) eta, eta) on basis vectors, straight from gamma matrices.
double omega_oracle(const Spinor16<double>& eta, int w, int x, int y, int z) {
  const GammaRep& g = rep();
  auto prod = [&](int a, int b, int c, int d) {
    return gamma_apply(g, a, gamma_apply(g, b, gamma_apply(g, c, gamma_apply(g, d, eta))));
  };
  return 0.5 * spinor_inner(spinor_add(prod(w, z, y, x), prod(w, x, y, z), -1.0), eta);
}

Vec8<double> unit(Vec8<double> v) {
  double n = 0;
  for (double x : v) n += x * x;
  for (auto& x : v) x /= std::sqrt(n);
  return v;
}

double dot(const Vec8<double>& a, const Vec8<double>& b) {
  double s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

Vec8<double> orthogonalize(Vec8<double> v, const std::vector<Vec8<double>>& against) {
  for (const auto& a : against) {
    const double c = dot(v, a);
    for (int i = 0; i < 8; ++i) v[i] -= c * a[i];
  }
  return unit(v);
}

Vec8<double> neg(Vec8<double> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("Omega of the base spinor") {
  const Spin7Form<Rational> om = omega_from_spinor(rep(), base_spinor<Rational>());
  CHECK(om.omega == cayley_omega<Rational>());
  CHECK(norm2(om.omega) == 14);
  CHECK(hodge(om.omega) == om.omega);
  CHECK(stabilizer_dimension(om.omega) == 21);
  CHECK(om.omega.terms().size() == 14);
  for (int j = 0; j < 8; ++j) {
    Vec8<Rational> x = zero_vec8<Rational>();
    x[j] = 1;
    CHECK(contract(x, om.omega) == hodge(wedge(KForm<Rational>::one_form(x), om.omega)));
  }
}

TEST_CASE("Omega matches the defining spinorial expression") {
  Sampler s(21);
  for (int t = 0; t < 5; ++t) {
    const Spinor16<double> eta = unit_spinor(s);
    const Spin7Form<double> om = omega_from_spinor(rep(), eta);
    for (const auto& idx : multi_indices(4)) {
      const auto a = idx.axes();
      CHECK(om.omega.coeff(idx) == doctest::Approx(omega_oracle(eta, a[0], a[1], a[2], a[3])).epsilon(1e-12));
    }
    CHECK(om.omega.value({1, 0, 2, 3}) == doctest::Approx(-om.omega.value({0, 1, 2, 3})));
    CHECK(norm2(om.omega) == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(max_abs(hodge(om.omega) - om.omega) < 1e-12);
    CHECK(stabilizer_dimension(om.omega) == 21);
  }
}

TEST_CASE("omega_from_spinor preconditions") {
  Spinor16<double> twice = base_spinor<double>();
  twice[0] = 2.0;
  CHECK_THROWS_AS(omega_from_spinor(rep(), twice), PreconditionError);
  Spinor16<double> negative = zero_spinor<double>();
  negative[8] = 1.0;
  CHECK_THROWS_AS(omega_from_spinor(rep(), negative), PreconditionError);
}

TEST_CASE("triple cross product") {
  const GammaRep& g = rep();
  const Spinor16<double> eta0 = base_spinor<double>();
  const Vec8<double> c012 = triple_cross(g, eta0, basis_vec8<double>(0), basis_vec8<double>(1), basis_vec8<double>(2));
  // Sign convention: g(X x Y x Z, W) = -Omega(X, Y, Z, W).
  CHECK(max_diff(c012, neg(basis_vec8<double>(3))) < 1e-15);

  Sampler s(22);
  for (int t = 0; t < 20; ++t) {
    const Spinor16<double> eta = unit_spinor(s);
    const Spin7Form<double> om = omega_from_spinor(g, eta);
    const Vec8<double> x = random_vec(s), y = random_vec(s), z = random_vec(s), w = random_vec(s);
    const Vec8<double> c = triple_cross(g, eta, x, y, z);
    CHECK(std::fabs(dot(c, x)) < 1e-12);
    CHECK(std::fabs(dot(c, y)) < 1e-12);
    CHECK(std::fabs(dot(c, z)) < 1e-12);
    const KForm<double> xyz = wedge(wedge(KForm<double>::one_form(x), KForm<double>::one_form(y)), KForm<double>::one_form(z));
    CHECK(dot(c, c) == doctest::Approx(norm2(xyz)).epsilon(1e-12));
    CHECK(dot(c, w) == doctest::Approx(-evaluate(om.omega, {x, y, z, w})).epsilon(1e-12));
    const Vec8<double> xxy = triple_cross(g, eta, x, x, y);
    CHECK(dot(xxy, xxy) < 1e-24);
    CHECK(max_diff(clifford_mul(g, c, eta), form_action(g, xyz, eta)) < 1e-12);

    // X x Y x (X x Z x W) = Y x Z x W for orthonormal X, Y, Z, W with W orthogonal to X x Y x Z.
    const Vec8<double> X = unit(x);
    const Vec8<double> Y = orthogonalize(y, {X});
    const Vec8<double> Z = orthogonalize(z, {X, Y});
    const Vec8<double> XYZ = triple_cross(g, eta, X, Y, Z);
    const Vec8<double> W = orthogonalize(w, {X, Y, Z, XYZ});
    const Vec8<double> lhs = triple_cross(g, eta, X, Y, triple_cross(g, eta, X, Z, W));
    CHECK(max_diff(lhs, triple_cross(g, eta, Y, Z, W)) < 1e-12);
  }
}

TEST_CASE("Cayley frames") {
  const GammaRep& g = rep();
  Sampler s(23);
  for (int t = 0; t < 10; ++t) {
    const Spinor16<double> eta = unit_spinor(s);
    const Vec8<double> e0 = unit(random_vec(s));
    const Vec8<double> e1 = orthogonalize(random_vec(s), {e0});
    const Vec8<double> e2 = orthogonalize(random_vec(s), {e0, e1});
    const Vec8<double> e3 = triple_cross(g, eta, e0, e1, e2);
    const Vec8<double> e4 = orthogonalize(random_vec(s), {e0, e1, e2, e3});
    const CayleyFrame f = cayley_frame(g, eta, e0, e1, e2, e4);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) CHECK(dot(f.e[a], f.e[b]) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
    const KForm<double> in_frame = omega_in_frame(omega_from_spinor(g, eta).omega, f);
    CHECK(max_abs(in_frame - form_cast<double>(cayley_omega<Rational>())) < 1e-10);
    CHECK(max_diff(frame_volume_action(g, f, eta), eta) < 1e-10);
  }
  const Vec8<double> b0 = basis_vec8<double>(0);
  CHECK_THROWS_AS(cayley_frame(g, base_spinor<double>(), b0, b0, basis_vec8<double>(2), basis_vec8<double>(4)),
                  PreconditionError);
}

TEST_CASE("Lambda^2 splitting") {
  const Spin7Form<Rational> om = omega_from_spinor(rep(), base_spinor<Rational>());
  for (int j = 1; j < 8; ++j) {
    const KForm<Rational> alpha = e({0, j}) - contract_axis(0, contract_axis(j, om.omega));
    const Split2<Rational> p = project2(om, alpha);
    CHECK(p.b7 == alpha);
    CHECK(p.b21.is_zero());
    CHECK(norm2(alpha) == 4);
    CHECK(lambda2_operator(om.omega, alpha) == Rational(3) * alpha);
  }
  DenseMatrix<Rational> b7s, b21s;
  for (const auto& idx : multi_indices(2)) {
    const Split2<Rational> p = project2(om, KForm<Rational>::monomial(idx));
    b7s.push_back(form_coords(p.b7));
    b21s.push_back(form_coords(p.b21));
    CHECK(lambda2_operator(om.omega, p.b21) == -p.b21);
    CHECK(inner(p.b7, p.b21) == 0);
  }
  CHECK(rank(b7s) == 7);
  CHECK(rank(b21s) == 21);

  Sampler s(24);
  const Spin7Form<double> omd = omega_from_spinor(rep(), s.unit_positive_spinor());
  const KForm<double> b = random_dense_form(s, 2);
  const Split2<double> p = project2(omd, b);
  CHECK(std::fabs(inner(p.b7, p.b21)) < 1e-13);
  CHECK(max_abs(p.b7 + p.b21 - b) < 1e-14);
}

TEST_CASE("Lambda^3 splitting") {
  const Spin7Form<Rational> om = omega_from_spinor(rep(), base_spinor<Rational>());
  const KForm<Rational> i0 = contract_axis(0, om.omega);
  CHECK(project3(om, i0).b8 == i0);
  CHECK(project3(om, i0).b48.is_zero());
  const KForm<Rational> pure48 = e({1, 2, 3}) + e({1, 4, 5});
  CHECK(project3(om, pure48).b8.is_zero());
  CHECK(project3(om, pure48).b48 == pure48);
  CHECK(wedge(pure48, om.omega).is_zero());

  DenseMatrix<Rational> b8s, b48s;
  for (const auto& idx : multi_indices(3)) {
    const Split3<Rational> p = project3(om, KForm<Rational>::monomial(idx));
    b8s.push_back(form_coords(p.b8));
    b48s.push_back(form_coords(p.b48));
    CHECK(wedge(p.b48, om.omega).is_zero());
    CHECK(inner(p.b8, p.b48) == 0);
  }
  CHECK(rank(b8s) == 8);
  CHECK(rank(b48s) == 48);

  Sampler s(25);
  for (int t = 0; t < 10; ++t) {
    const Spin7Form<double> omd = omega_from_spinor(rep(), s.unit_positive_spinor());
    const Vec8<double> x = random_vec(s);
    CHECK(norm2(contract(x, omd.omega)) == doctest::Approx(7.0 * dot(x, x)).epsilon(1e-12));
    const KForm<double> b = random_dense_form(s, 3);
    const Split3<double> p = project3(omd, b);
    CHECK(max_abs(p.b8 - contract(lambda3_8_vector(omd, b), omd.omega)) < 1e-13);
    CHECK(max_abs(wedge(p.b48, omd.omega)) < 1e-13);
  }
}

TEST_CASE("c-isomorphism") {
  const GammaRep& g = rep();
  Sampler s(26);
  for (int t = 0; t < 10; ++t) {
    const Spinor16<double> eta = s.unit_positive_spinor();
    const Spin7Form<double> om = omega_from_spinor(g, eta);
    const Split2<double> p = project2(om, random_dense_form(s, 2));
    const Spinor16<double> c = c_map(g, om, p.b7);
    CHECK(spinor_norm(c) == doctest::Approx(2.0 * std::sqrt(norm2(p.b7))).epsilon(1e-12));
    CHECK(std::fabs(spinor_inner(c, eta)) < 1e-13);
    CHECK(max_abs(c_inverse(g, eta, c) - p.b7) < 1e-13);
    CHECK(spinor_norm(c_map(g, om, p.b21, false)) < 1e-13);
    CHECK_THROWS_AS(c_map(g, om, p.b21 + p.b7), PreconditionError);
  }
  const Spinor16<double> eta = base_spinor<double>();
  CHECK_THROWS_AS(c_inverse(g, eta, eta), PreconditionError);
}

TEST_CASE("Theta/Xi eigenvalues") {
  const Spin7Form<Rational> om = omega_from_spinor(rep(), base_spinor<Rational>());
  const KForm<Rational> i0 = contract_axis(0, om.omega);
  CHECK(theta_xi(om, i0) == Rational(9, 4) * i0);
  const KForm<Rational> pure48 = e({1, 2, 3}) + e({1, 4, 5});
  CHECK(theta_xi(om, pure48) == Rational(1, 2) * pure48);
  std::mt19937_64 gen(4);
  for (int t = 0; t < 5; ++t) {
    const KForm<Rational> b = spin7::testing::random_form(gen, 3, 6);
    const Split3<Rational> p = project3(om, b);
    CHECK(project3(om, theta_xi(om, b)).b8 == theta_xi(om, p.b8));
    CHECK(theta_xi(om, b) == Rational(9, 4) * p.b8 + Rational(1, 2) * p.b48);
  }
}

TEST_CASE("so(8) action stabilizer of a generic 4-form is trivial") {
  KForm<Rational> f(4);
  Rational c = 1;
  for (const auto& idx : multi_indices(4)) {
    f.add(idx, c);
    c += 1;
  }
  CHECK(stabilizer_dimension(f) == 0);
  CHECK(stabilizer_dimension(e({0, 1, 2, 3})) == 12);
}
