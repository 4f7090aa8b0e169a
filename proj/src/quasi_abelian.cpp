#include "spin7/quasi_abelian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

namespace spin7 {

LieAlgebra8<double> QAAlgebra::algebra() const {
  LieAlgebra8<double>::Constants c;
  c.fill(0.0);
  auto at = [&c](int i, int j, int k) -> double& { return c[static_cast<std::size_t>((i * 8 + j) * 8 + k)]; };
  for (int j = 1; j < 8; ++j)
    for (int k = 1; k < 8; ++k) {
      at(0, j, k) = e(k - 1, j - 1);
      at(j, 0, k) = -e(k - 1, j - 1);
    }
  return LieAlgebra8<double>::from_constants(c);
}

QAAlgebra make_qa(const Mat7& e) {
  if (!e.allFinite()) throw InputError("matrix E has non-finite entries");
  return QAAlgebra{e};
}

Mat7 SkewNormalForm::model() const {
  Mat7 m = Mat7::Zero();
  for (int a = 0; a < 3; ++a) {
    m(2 * a + 1, 2 * a) = lambdas[a];
    m(2 * a, 2 * a + 1) = -lambdas[a];
  }
  return m;
}

SkewNormalForm skew_normal_form(const Mat7& e24, double skew_tol) {
  if (!e24.allFinite()) throw PreconditionError("non-finite matrix");
  if ((e24 + e24.transpose()).cwiseAbs().maxCoeff() > skew_tol)
    throw PreconditionError("skew_normal_form expects a skew-symmetric matrix");
  const Mat7 k = 0.5 * (e24 - e24.transpose());
  Eigen::RealSchur<Mat7> schur(k);
  const Mat7 t = schur.matrixT();
  const Mat7 q = schur.matrixU();

  struct Pair {
    double lambda;
    Vec7 v, w;
  };
  std::vector<Pair> pairs;
  std::vector<Vec7> kernel;
  for (int p = 0; p < 7;) {
    if (p + 1 < 7 && t(p + 1, p) != 0.0) {
      Vec7 v = q.col(p);
      Vec7 w = k * v;
      w -= w.dot(v) * v;
      const double n = w.norm();
      if (n > 0.0) {
        pairs.push_back({n, v, w / n});
      } else {
        kernel.push_back(q.col(p));
        kernel.push_back(q.col(p + 1));
      }
      p += 2;
    } else {
      kernel.push_back(q.col(p));
      ++p;
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.lambda < b.lambda; });
  // Zero pairs come first in ascending order.
  std::vector<Pair> zero_pairs;
  while (pairs.size() + zero_pairs.size() < 3 && kernel.size() >= 3) {
    zero_pairs.push_back({0.0, kernel[kernel.size() - 1], kernel[kernel.size() - 2]});
    kernel.resize(kernel.size() - 2);
  }
  pairs.insert(pairs.begin(), zero_pairs.begin(), zero_pairs.end());
  if (pairs.size() != 3 || kernel.size() != 1) throw ConventionError("skew normal form lost track of the kernel");

  SkewNormalForm out;
  for (int a = 0; a < 3; ++a) {
    out.lambdas[a] = pairs[a].lambda;
    out.basis.col(2 * a) = pairs[a].v;
    out.basis.col(2 * a + 1) = pairs[a].w;
  }
  out.basis.col(6) = kernel[0];
  if (out.basis.determinant() < 0) out.basis.col(6) = -kernel[0];
  return out;
}

double det_formula(double l1, double l2, double l3) {
  const double p = (l1 + l2 + l3) * (l1 + l2 - l3) * (l1 - l2 - l3) * (l1 - l2 + l3);
  return p * p;
}

namespace {

Mat8 to_eigen(const IntMat8& m) {
  Mat8 out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out(r, c) = m[r][c];
  return out;
}

Mat8 two_form_matrix(const Cl7Rep& cl7, const Mat7& b) {
  std::array<Mat8, 7> rho;
  for (int i = 0; i < 7; ++i) rho[i] = to_eigen(cl7.L[i]);
  Mat8 m = Mat8::Zero();
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (b(i, j) != 0.0) m += b(i, j) * rho[i] * rho[j];
  return m;
}

Spinor16<double> spinor_of(const Vec8d& v) {
  Spinor16<double> s = zero_spinor<double>();
  const double n = v.norm();
  for (int i = 0; i < 8; ++i) s[i] = v(i) / n;
  return s;
}

double frobenius(const Mat7& m) { return m.norm(); }

}  // namespace

SpinorKernel spinor_kernel(const Cl7Rep& cl7, const Mat7& e24, double tol) {
  const SkewNormalForm nf = skew_normal_form(e24, std::max(1e-12, 1e-12 * e24.cwiseAbs().maxCoeff()));
  SpinorKernel out;

  // Model basis in the order X_1 = u, X_2 = v1, X_3 = w1, ...
  Mat7 b = Mat7::Zero();
  for (int a = 0; a < 3; ++a) {
    b(2 * a + 1, 2 * a + 2) = -nf.lambdas[a];
    b(2 * a + 2, 2 * a + 1) = nf.lambdas[a];
  }
  out.model_matrix = two_form_matrix(cl7, b);
  out.model_det = out.model_matrix.determinant();
  out.frame_matrix = two_form_matrix(cl7, e24);
  out.frame_det = out.frame_matrix.determinant();

  Eigen::JacobiSVD<Mat8> model_svd(out.model_matrix);
  const double mthr = tol * std::max(1.0, model_svd.singularValues()(0));
  for (int i = 0; i < 8; ++i)
    if (model_svd.singularValues()(i) <= mthr) ++out.model_kernel_dim;

  Eigen::JacobiSVD<Mat8> svd(out.frame_matrix, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thr = tol * std::max(1.0, sv(0));
  for (int i = 0; i < 8; ++i) {
    out.singular_values[i] = sv(i);
    if (sv(i) <= thr) out.kernel.push_back(svd.matrixV().col(i));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::No: return "false";
    case Verdict::Yes: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

QAReport classify_qa(const GammaRep& rep, const Mat7& e, double tol) {
  const QAAlgebra qa = make_qa(e);
  QAReport r;
  r.e = e;
  r.tolerance = tol;
  r.witness_tolerance = 10.0 * tol * (1.0 + frobenius(e));
  const Mat7 e13 = qa.e13();
  const Mat7 e24 = qa.e24();
  r.trace = qa.trace();
  r.unimodular = std::fabs(r.trace) <= tol;
  r.abelian = e.cwiseAbs().maxCoeff() <= tol;

  r.normal_form = skew_normal_form(e24, std::max(1e-12, 1e-12 * e.cwiseAbs().maxCoeff()));
  const auto& l = r.normal_form.lambdas;
  r.lambda_defect = std::fabs(l[2] - l[1] - l[0]);
  r.lambda_condition = r.lambda_defect <= tol * (1.0 + l[2]);
  r.det_formula_value = det_formula(l[0], l[1], l[2]);

  const Cl7Rep cl7 = build_octonion_rep(rep.induced_cl7_theta);
  const SpinorKernel sk = spinor_kernel(cl7, e24, tol);
  r.det_value = sk.frame_det;
  r.kernel_dim = static_cast<int>(sk.kernel.size());

  const double h = r.trace / 7.0;
  const bool e13_zero = e13.cwiseAbs().maxCoeff() <= tol;
  const bool e13_scalar = (e13 - h * Mat7::Identity()).cwiseAbs().maxCoeff() <= tol;
  if (e13_scalar) r.h = h;
  const bool e24_nonzero = e24.cwiseAbs().maxCoeff() > tol;

  const LieAlgebra8<double> g = qa.algebra();
  const Curvature curv = curvature(g);
  r.max_curvature = curv.max_abs();
  r.flat = r.max_curvature <= tol * (1.0 + e.squaredNorm());

  auto verify = [&](const std::string& flag, const Spinor16<double>& eta, auto&& predicate) {
    const TorsionReport tr = star_d_omega(rep, g, eta, r.witness_tolerance);
    QAWitness w{flag, eta, tr.flags, tr.residuals};
    if (!predicate(tr.flags)) throw InconsistencyError("witness spinor does not confirm the '" + flag + "' flag");
    r.witnesses.push_back(w);
  };

  if (r.abelian) {
    r.note = "E = 0: abelian algebra, every invariant spinor is parallel";
    r.admits_parallel = true;
    r.admits_balanced = true;
    r.admits_lcp_nonparallel = false;
    r.admits_mixed = Verdict::No;
    verify("parallel", base_spinor<double>(), [](const TorsionFlags& f) { return f.parallel; });
    return r;
  }

  r.admits_parallel = e13_zero && r.lambda_condition;
  r.admits_lcp_nonparallel = e13_scalar && std::fabs(h) > tol && r.lambda_condition;
  r.admits_balanced = r.unimodular && r.lambda_condition;
  r.admits_mixed = e24_nonzero ? Verdict::Yes : Verdict::Unknown;
  if (!e24_nonzero)
    r.note = "E24 = 0: the kernel search cannot decide whether a mixed structure exists";

  if (r.admits_parallel || r.admits_lcp_nonparallel || r.admits_balanced) {
    Eigen::JacobiSVD<Mat8> svd(sk.frame_matrix, Eigen::ComputeFullV);
    const Vec8d v = sk.kernel.empty() ? Vec8d(svd.matrixV().col(7)) : sk.kernel.front();
    const Spinor16<double> eta = spinor_of(v);
    if (r.admits_parallel) verify("parallel", eta, [](const TorsionFlags& f) { return f.parallel; });
    if (r.admits_lcp_nonparallel)
      verify("lcp_nonparallel", eta, [](const TorsionFlags& f) { return f.lcp && !f.parallel; });
    if (r.admits_balanced) verify("balanced", eta, [](const TorsionFlags& f) { return f.balanced; });
  }
  if (r.admits_mixed == Verdict::Yes) {
    // Pick the fixed candidate least annihilated by E24.
    std::vector<Vec8d> candidates;
    for (int i = 0; i < 8; ++i) candidates.push_back(Vec8d::Unit(i));
    candidates.push_back(Vec8d::Ones());
    Vec8d alt;
    for (int i = 0; i < 8; ++i) alt(i) = (i % 2) ? -1.0 : 1.0 + 0.25 * i;
    candidates.push_back(alt);
    Vec8d best = candidates.front();
    double best_score = -1.0;
    for (const auto& c : candidates) {
      const double score = (sk.frame_matrix * c).norm() / c.norm();
      if (score > best_score + 1e-12) {
        best_score = score;
        best = c;
      }
    }
    verify("mixed", spinor_of(best), [](const TorsionFlags& f) { return f.mixed; });
  }
  if (r.admits_parallel && !r.flat) throw InconsistencyError("parallel structure on a non-flat algebra");
  return r;
}

PureComponents clasiqab_closed_form(const GammaRep& rep, const Mat7& e, const Spinor16<double>& eta) {
  const Spin7Form<double> om = omega_from_spinor(rep, eta);
  const KForm<double> psi = contract(basis_vec8<double>(0), om.omega);
  const EndoDecomp dec = decompose_endo(psi, e);
  const double h = e.trace() / 7.0;
  const KForm<double> n_psi = wedge(KForm<double>::monomial(MultiIndex{0}), psi);
  const KForm<double> star_psi = hodge(n_psi);
  const Vec8<double> ev = lift(dec.svec);
  PureComponents pc;
  pc.c48 = (2.0 / 7.0) * (-6.0 * contract(ev, n_psi) + 4.5 * contract(ev, star_psi)) + 3.0 * beta3_form(psi, dec.s3);
  Vec8<double> w = lift((12.0 / 7.0) * dec.svec);
  w[0] -= 4.0 * h;
  pc.c8 = contract(w, n_psi + star_psi);
  return pc;
}

PureComponents clasiqab_components(const GammaRep& rep, const Mat7& e, const Spinor16<double>& eta, double tol) {
  const QAAlgebra qa = make_qa(e);
  const PureComponents pc = clasiqab_closed_form(rep, e, eta);
  const TorsionReport tr = star_d_omega(rep, qa.algebra(), eta, tol * (1.0 + frobenius(e)));
  const Split3<double> parts = project3(tr.omega, tr.star_d_omega);
  const double scale = tol * (1.0 + frobenius(e));
  if (max_abs(parts.b48 - pc.c48) > scale || max_abs(parts.b8 - pc.c8) > scale)
    throw InconsistencyError("closed-form *dOmega components disagree with the spinorial pipeline");
  return pc;
}

Curvature qa_curvature_closed_form(const Mat7& e) {
  const Mat7 s = 0.5 * (e + e.transpose());
  const Mat7 k = 0.5 * (e - e.transpose());
  const Mat7 m = s * s + s * k - k * s;
  Curvature r;
  for (int j = 1; j < 8; ++j) {
    const Vec8<double> mj = lift(m.col(j - 1));
    r(0, j, 0) = mj;
    for (auto& x : r(j, 0, 0) = mj) x = -x;
    for (int kk = 1; kk < 8; ++kk) {
      Vec8<double> v = zero_vec8<double>();
      v[0] = -m(kk - 1, j - 1);
      r(0, j, kk) = v;
      v[0] = -v[0];
      r(j, 0, kk) = v;
    }
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      for (int kk = 1; kk < 8; ++kk) {
        const Vec7 v = s(i - 1, kk - 1) * s.col(j - 1) - s(j - 1, kk - 1) * s.col(i - 1);
        r(i, j, kk) = lift(v);
      }
  return r;
}

Mat8 exp_tE(const Mat7& e, double t) {
  Mat7 x = Mat7::Identity();
  // Exact Taylor polynomial when E is nilpotent (E^7 = 0 exactly in floating point).
  Mat7 power = Mat7::Identity();
  bool nilpotent = false;
  Mat7 sum = Mat7::Identity();
  double coeff = 1.0;
  for (int n = 1; n <= 7; ++n) {
    power = power * e;
    if ((power.array() == 0.0).all()) {
      nilpotent = true;
      break;
    }
    coeff *= t / n;
    sum += coeff * power;
  }
  if (nilpotent) {
    x = sum;
  } else {
    const Mat7 te = t * e;
    x = te.exp();
  }
  Mat8 out = Mat8::Identity();
  out.block<7, 7>(1, 1) = x;
  return out;
}

bool solv_obstruction(const Mat7& e, double tol) { return std::fabs(e.trace()) <= tol; }

Mat7 nilpotent_example() {
  Mat7 e = Mat7::Zero();
  e(0, 1) = -1;
  e(1, 2) = -2;
  e(3, 4) = -1;
  e(4, 5) = -1;
  e(5, 6) = -1;
  return e;
}

Mat7 rotation_example() {
  // E e_2 = e_3, E e_4 = e_5.
  Mat7 e = Mat7::Zero();
  e(2, 1) = 1;
  e(1, 2) = -1;
  e(4, 3) = 1;
  e(3, 4) = -1;
  return e;
}

std::string structure_equations(const LieAlgebra8<double>& g, double tol) {
  std::ostringstream out;
  out << '(';
  for (int k = 0; k < 8; ++k) {
    if (k) out << ',';
    bool any = false;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        const double c = -g.c(i, j, k);
        if (std::fabs(c) <= tol) continue;
        const double mag = std::fabs(c);
        if (c < 0) out << '-';
        else if (any) out << '+';
        if (std::fabs(mag - 1.0) > tol) {
          if (std::fabs(mag - std::round(mag)) <= tol) out << static_cast<long long>(std::llround(mag));
          else out << mag;
          out << '*';
        }
        out << i << j;
        any = true;
      }
    if (!any) out << '0';
  }
  out << ')';
  return out.str();
}

}  // namespace spin7
