#include <cmath>

#include "helpers.hpp"

using namespace spin7;
using spin7::testing::rep;

namespace {

// Skew matrix with normal form (l1, l2, l3) on the planes (e1,e2), (e3,e4), (e5,e6); e7 is the kernel.
Mat7 skew_blocks(double l1, double l2, double l3) {
  Mat7 k = Mat7::Zero();
  const double l[3] = {l1, l2, l3};
  for (int a = 0; a < 3; ++a) {
    k(2 * a + 1, 2 * a) = l[a];
    k(2 * a, 2 * a + 1) = -l[a];
  }
  return k;
}

Mat7 random_orthogonal(Sampler& s) {
  const Eigen::HouseholderQR<Mat7> qr(s.matrix());
  return qr.householderQ();
}

}  // namespace

TEST_CASE("quasi-abelian algebra") {
  Sampler s(51);
  const Mat7 e = s.matrix();
  const QAAlgebra qa = make_qa(e);
  CHECK((qa.e13() + qa.e24() - e).norm() < 1e-15);
  const LieAlgebra8<double> g = qa.algebra();
  for (int j = 1; j < 8; ++j)
    for (int k = 1; k < 8; ++k) {
      CHECK(g.c(0, j, k) == e(k - 1, j - 1));
      CHECK(g.c(j, 0, k) == -e(k - 1, j - 1));
      for (int m = 0; m < 8; ++m) CHECK(g.c(j, k, m) == 0.0);
    }
  Mat7 bad = e;
  bad(2, 3) = std::nan("");
  CHECK_THROWS_AS(make_qa(bad), InputError);
  bad(2, 3) = INFINITY;
  CHECK_THROWS_AS(make_qa(bad), InputError);
}

TEST_CASE("skew normal form") {
  const SkewNormalForm z = skew_normal_form(Mat7::Zero());
  for (double l : z.lambdas) CHECK(l == 0.0);
  CHECK(z.basis.determinant() == doctest::Approx(1.0));

  const SkewNormalForm r = skew_normal_form(0.5 * (rotation_example() - rotation_example().transpose()));
  CHECK(r.lambdas[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.lambdas[1] == doctest::Approx(1.0));
  CHECK(r.lambdas[2] == doctest::Approx(1.0));

  Sampler s(52);
  for (int t = 0; t < 20; ++t) {
    const Mat7 k = s.skew();
    const SkewNormalForm nf = skew_normal_form(k);
    CHECK(nf.lambdas[0] <= nf.lambdas[1]);
    CHECK(nf.lambdas[1] <= nf.lambdas[2]);
    CHECK(nf.lambdas[0] >= 0.0);
    CHECK((nf.basis.transpose() * nf.basis - Mat7::Identity()).norm() < 1e-12);
    CHECK(nf.basis.determinant() == doctest::Approx(1.0));
    CHECK((nf.basis.transpose() * k * nf.basis - nf.model()).norm() < 1e-12);

    // Invariant under SO(7) conjugation.
    const Mat7 q = random_orthogonal(s);
    const SkewNormalForm nq = skew_normal_form(q * k * q.transpose());
    for (int a = 0; a < 3; ++a) CHECK(nq.lambdas[a] == doctest::Approx(nf.lambdas[a]).epsilon(1e-10));
  }

  const Mat7 k = skew_blocks(3, 1, 2);
  const SkewNormalForm nf = skew_normal_form(k);
  CHECK(nf.lambdas[0] == doctest::Approx(1.0));
  CHECK(nf.lambdas[1] == doctest::Approx(2.0));
  CHECK(nf.lambdas[2] == doctest::Approx(3.0));
}

TEST_CASE("determinant formula and kernel dimension") {
  CHECK(det_formula(1, 1, 2) == doctest::Approx(0.0));
  CHECK(det_formula(1, 1, 3) == doctest::Approx(2025.0));
  CHECK(det_formula(0, 0, 0) == 0.0);

  const Cl7Rep cl7 = build_octonion_rep(rep().induced_cl7_theta);
  CHECK(spinor_kernel(cl7, Mat7::Zero()).kernel.size() == 8);
  CHECK(spinor_kernel(cl7, skew_blocks(1, 1, 2)).kernel.size() >= 1);
  CHECK(spinor_kernel(cl7, skew_blocks(1, 1, 3)).kernel.empty());

  Sampler s(53);
  for (int t = 0; t < 20; ++t) {
    const Mat7 k = s.skew();
    const SpinorKernel sk = spinor_kernel(cl7, k);
    const SkewNormalForm nf = skew_normal_form(k);
    const double formula = det_formula(nf.lambdas[0], nf.lambdas[1], nf.lambdas[2]);
    const double scale = std::max(1.0, std::fabs(formula));
    CHECK(sk.model_det == doctest::Approx(formula).epsilon(1e-9).scale(scale));
    CHECK(sk.frame_det == doctest::Approx(sk.model_det).epsilon(1e-9).scale(scale));
  }
  const SpinorKernel sk = spinor_kernel(cl7, skew_blocks(1, 2, 3));
  for (const Vec8d& v : sk.kernel) CHECK((sk.frame_matrix * v).norm() < 1e-12);
}

TEST_CASE("classification examples") {
  const GammaRep& g = rep();
  const QAReport abelian = classify_qa(g, Mat7::Zero());
  CHECK(abelian.abelian);
  CHECK(abelian.admits_parallel);
  CHECK(!abelian.note.empty());
  CHECK(abelian.flat);

  // E13 = Id with lambda = (1, 1, 2): strict lcp but nothing else forced.
  const QAReport lcp = classify_qa(g, Mat7::Identity() + skew_blocks(1, 1, 2));
  CHECK(lcp.lambda_condition);
  CHECK(lcp.admits_lcp_nonparallel);
  CHECK(!lcp.admits_parallel);
  CHECK(!lcp.admits_balanced);
  REQUIRE(lcp.h.has_value());
  CHECK(*lcp.h == doctest::Approx(1.0));
  CHECK(!lcp.unimodular);
  CHECK(!lcp.flat);

  const QAReport no_lcp = classify_qa(g, Mat7::Identity() + skew_blocks(1, 1, 3));
  CHECK(!no_lcp.lambda_condition);
  CHECK(!no_lcp.admits_lcp_nonparallel);
  CHECK(no_lcp.det_value == doctest::Approx(2025.0).epsilon(1e-9));

  const QAReport nil = classify_qa(g, nilpotent_example());
  CHECK(nil.admits_balanced);
  CHECK(nil.admits_mixed == Verdict::Yes);
  CHECK(!nil.admits_parallel);
  CHECK(nil.unimodular);

  const QAReport rot = classify_qa(g, rotation_example());
  CHECK(rot.admits_parallel);
  CHECK(rot.flat);

  // Symmetric E with no skew part: the mixed verdict cannot be decided from a witness search.
  Mat7 diag = Mat7::Zero();
  for (int i = 0; i < 7; ++i) diag(i, i) = 1.0 + i;
  const QAReport sym = classify_qa(g, diag);
  CHECK(sym.admits_mixed == Verdict::Unknown);
  CHECK(to_string(Verdict::Unknown) == "unknown");
  CHECK(to_string(Verdict::Yes) == "true");
  CHECK(to_string(Verdict::No) == "false");

  Sampler s(54);
  for (int t = 0; t < 10; ++t) {
    const QAReport r = classify_qa(g, s.matrix());
    for (const QAWitness& w : r.witnesses) {
      if (w.flag == "parallel") CHECK(w.flags.parallel);
      if (w.flag == "lcp") CHECK(w.flags.lcp);
      if (w.flag == "balanced") CHECK(w.flags.balanced);
    }
    CHECK(r.witness_tolerance == doctest::Approx(10 * r.tolerance * (1 + r.e.norm())));
  }
}

TEST_CASE("closed form of *dOmega on quasi-abelian algebras") {
  const GammaRep& g = rep();
  Sampler s(55);
  for (int t = 0; t < 10; ++t) {
    const Mat7 e = s.matrix();
    const Spinor16<double> eta = t % 2 ? s.unit_positive_spinor() : base_spinor<double>();
    const PureComponents closed = clasiqab_closed_form(g, e, eta);
    const TorsionReport r = star_d_omega(g, make_qa(e).algebra(), eta);
    const Split3<double> split = project3(r.omega, r.star_d_omega);
    CHECK(max_abs(closed.c48 - split.b48) < 1e-12);
    CHECK(max_abs(closed.c8 - split.b8) < 1e-12);
    CHECK_NOTHROW(clasiqab_components(g, e, eta));
  }
  // E = h Id only sees h.
  const PureComponents hid = clasiqab_closed_form(g, 2.0 * Mat7::Identity(), base_spinor<double>());
  CHECK(hid.c48.is_zero());
  const KForm<double> psi = psi_from_omega(omega_from_spinor(g, base_spinor<double>()), basis_vec8<double>(0));
  CHECK(max_abs(hid.c8 + 8.0 * psi) < 1e-13);
}

TEST_CASE("matrix exponential and examples") {
  CHECK((exp_tE(Mat7::Zero(), 3.0) - Mat8::Identity()).norm() == 0.0);
  const Mat8 n = exp_tE(nilpotent_example(), 1.0);
  CHECK(n(0, 0) == 1.0);
  const Mat7 e = nilpotent_example();
  Mat7 series = Mat7::Identity();
  Mat7 term = Mat7::Identity();
  for (int k = 1; k < 8; ++k) {
    term = term * e / k;
    series += term;
  }
  CHECK((n.block<7, 7>(1, 1) - series).norm() < 1e-15);

  const Mat8 r = exp_tE(rotation_example(), M_PI);
  CHECK((r - r.array().round().matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(((r * r.transpose()) - Mat8::Identity()).norm() < 1e-12);

  CHECK(structure_equations(make_qa(nilpotent_example()).algebra()) == "(0,02,2*03,0,05,06,07,0)");
  CHECK(structure_equations(make_qa(rotation_example()).algebra()) == "(0,0,03,-02,05,-04,0,0)");
  CHECK(structure_equations(LieAlgebra8<double>()) == "(0,0,0,0,0,0,0,0)");
}

TEST_CASE("unimodular obstruction") {
  CHECK(solv_obstruction(nilpotent_example()));
  CHECK(!solv_obstruction(Mat7::Identity()));
  Sampler s(56);
  Mat7 e = s.matrix();
  e -= (e.trace() / 7.0) * Mat7::Identity();
  CHECK(solv_obstruction(e));
  CHECK(!classify_qa(rep(), e).admits_lcp_nonparallel);
}

TEST_CASE("golden relations for the base spinor") {
  const GammaRep& g = rep();
  const Spinor16<double> eta = base_spinor<double>();
  const Vec8<double> n = basis_vec8<double>(0);
  auto xy = [&](int a, int b) {
    return dist_clifford(g, n, basis_vec8<double>(a), dist_clifford(g, n, basis_vec8<double>(b), eta));
  };
  CHECK(spinor_norm(spinor_add(xy(2, 3), xy(4, 5))) < 1e-15);
  CHECK(spinor_norm(spinor_add(xy(2, 3), xy(6, 7))) < 1e-15);
  CHECK(spinor_norm(spinor_add(xy(1, 2), xy(5, 6))) < 1e-15);
  CHECK(spinor_norm(xy(2, 3)) > 0.5);
}
