#include "spin7/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace spin7 {

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Mat7 Sampler::matrix() {
  Mat7 m;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m(r, c) = uniform();
  return m;
}

Mat7 Sampler::skew() {
  const Mat7 m = matrix();
  return m - m.transpose();
}

Spinor16<double> Sampler::unit_positive_spinor() {
  std::array<double, 8> x{};
  double n = 0.0;
  for (auto& v : x) {
    v = uniform();
    n += v * v;
  }
  n = std::sqrt(n);
  for (auto& v : x) v /= n;
  return embed_positive(x);
}

namespace {

double scale(const SuiteConfig& cfg) { return cfg.tolerance / 1e-9; }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

CriterionResult make(int id, std::string name, bool exact, double threshold) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.exact = exact;
  r.threshold = threshold;
  return r;
}

// Runs body, turning library exceptions into a failed criterion.
CriterionResult guarded(CriterionResult r, const std::function<void(CriterionResult&)>& body) {
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

DenseMatrix<Rational> operator_matrix(int degree, const std::function<KForm<Rational>(const KForm<Rational>&)>& op) {
  DenseMatrix<Rational> m;
  for (const auto& idx : multi_indices(degree)) m.push_back(form_coords(op(KForm<Rational>::monomial(idx))));
  return m;
}

int rank_shifted(DenseMatrix<Rational> m, const Rational& lambda) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= lambda;
  return rank(m);
}

struct QASample {
  Mat7 e;
  Spinor16<double> eta;
};

std::vector<QASample> qa_samples(const SuiteConfig& cfg, int n) {
  Sampler s(cfg.seed ^ 0x51ULL);
  std::vector<QASample> out;
  for (int i = 0; i < n; ++i) {
    QASample q;
    q.e = s.matrix();
    q.eta = s.unit_positive_spinor();
    out.push_back(q);
  }
  return out;
}

}  // namespace

CriterionResult criterion_representation(const SuiteConfig&) {
  return guarded(make(1, "representation: Clifford relations and chirality", true, 0.0), [](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    int bad = 0;
    int pairs = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i; j < 8; ++j) {
        ++pairs;
        const IntMat16 a = mat_mul(rep.gamma[i], rep.gamma[j]);
        const IntMat16 b = mat_mul(rep.gamma[j], rep.gamma[i]);
        for (int p = 0; p < 16; ++p)
          for (int q = 0; q < 16; ++q)
            if (a[p][q] + b[p][q] != ((i == j && p == q) ? -2 : 0)) ++bad;
      }
    bool nu_ok = true;
    for (int p = 0; p < 16; ++p)
      for (int q = 0; q < 16; ++q) nu_ok = nu_ok && rep.nu8[p][q] == (p == q ? (p < 8 ? 1 : -1) : 0);
    const bool sq = mat_mul(rep.nu8, rep.nu8) == identity16();
    r.passed = bad == 0 && pairs == 36 && nu_ok && sq;
    r.detail = std::to_string(pairs) + " anticommutators, " + std::to_string(bad) + " bad entries; nu8 " +
               (nu_ok ? "= diag(+I,-I)" : "wrong") + "; nu8^2 " + (sq ? "= I" : "!= I");
  });
}

CriterionResult criterion_omega(const SuiteConfig&) {
  return guarded(make(2, "Omega: self-duality, norm, stabilizer", true, 0.0), [](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    const Spin7Form<Rational> om = omega_from_spinor(rep, base_spinor<Rational>());
    const bool sd = hodge(om.omega) == om.omega;
    const Rational n2 = norm2(om.omega);
    const int stab = stabilizer_dimension(om.omega);
    r.passed = sd && n2 == 14 && stab == 21;
    r.detail = std::string("*Omega ") + (sd ? "=" : "!=") + " Omega; |Omega|^2 = " + to_string(n2) +
               "; dim stabilizer = " + std::to_string(stab);
  });
}

CriterionResult criterion_eigenvalues(const SuiteConfig&) {
  return guarded(make(3, "eigenvalue multiplicities on forms", true, 0.0), [](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    const Spin7Form<Rational> om = omega_from_spinor(rep, base_spinor<Rational>());
    const auto l2 = operator_matrix(2, [&](const KForm<Rational>& b) { return lambda2_operator(om.omega, b); });
    const auto l3 = operator_matrix(3, [&](const KForm<Rational>& b) { return theta_xi(om, b); });
    const int m3 = 28 - rank_shifted(l2, Rational(3));
    const int m1 = 28 - rank_shifted(l2, Rational(-1));
    const int m94 = 56 - rank_shifted(l3, Rational(9, 4));
    const int m12 = 56 - rank_shifted(l3, Rational(1, 2));
    r.passed = m3 == 7 && m1 == 21 && m94 == 8 && m12 == 48;
    r.detail = "Lambda2: 3 (x" + std::to_string(m3) + "), -1 (x" + std::to_string(m1) + "); Lambda3: 9/4 (x" +
               std::to_string(m94) + "), 1/2 (x" + std::to_string(m12) + ")";
  });
}

CriterionResult criterion_c_map(const SuiteConfig&) {
  return guarded(make(4, "c-isomorphism: alpha_j eta = 4 e^{0j} eta", true, 0.0), [](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    const Spinor16<Rational> eta = base_spinor<Rational>();
    const Spin7Form<Rational> om = omega_from_spinor(rep, eta);
    // The standard basis is the Cayley frame; confirm both ways.
    const bool pattern = om.omega == cayley_omega<Rational>();
    const CayleyFrame frame =
        cayley_frame(rep, base_spinor<double>(), basis_vec8<double>(0), basis_vec8<double>(1), basis_vec8<double>(2),
                     basis_vec8<double>(4));
    bool standard = true;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) standard = standard && frame.e[a][b] == (a == b ? 1.0 : 0.0);
    int bad = 0;
    for (int j = 1; j < 8; ++j) {
      const KForm<Rational> e0j = KForm<Rational>::monomial(MultiIndex{0, j});
      const KForm<Rational> alpha = e0j - contract_axis(0, contract_axis(j, om.omega));
      const Spinor16<Rational> lhs = form_action(rep, alpha, eta);
      const Spinor16<Rational> rhs = spinor_scale(form_action(rep, e0j, eta), Rational(4));
      if (lhs != rhs) ++bad;
    }
    r.passed = pattern && standard && bad == 0;
    r.detail = std::string("Cayley pattern ") + (pattern ? "matches" : "differs") + ", completed frame " +
               (standard ? "is the standard basis" : "differs from the standard basis") + ", " +
               std::to_string(7 - bad) + "/7 identities exact";
  });
}

CriterionResult criterion_determinant(const SuiteConfig& cfg) {
  return guarded(make(5, "determinant identity on 200 random skew matrices", false, 1e-8 * scale(cfg)),
                 [&](CriterionResult& r) {
                   const Cl7Rep cl7 = build_octonion_rep(build_cl8_rep().induced_cl7_theta);
                   Sampler s(cfg.seed ^ 0x5ULL);
                   double worst = 0.0;
                   for (int n = 0; n < 200; ++n) {
                     const Mat7 k = s.skew();
                     const SpinorKernel sk = spinor_kernel(cl7, k, cfg.tolerance);
                     const SkewNormalForm nf = skew_normal_form(k);
                     const double f = det_formula(nf.lambdas[0], nf.lambdas[1], nf.lambdas[2]);
                     const double denom = std::max(std::fabs(f), 1e-300);
                     worst = std::max({worst, std::fabs(sk.frame_det - f) / denom, std::fabs(sk.model_det - f) / denom});
                   }
                   r.residual = worst;
                   r.passed = worst <= r.threshold;
                   r.detail = "max relative error " + fmt(worst) + " (frame and model determinants)";
                 });
}

CriterionResult criterion_dual_path(const SuiteConfig& cfg) {
  return guarded(make(6, "dual-path *dOmega and closed-form components", false, 1e-9 * scale(cfg)),
                 [&](CriterionResult& r) {
                   const GammaRep rep = build_cl8_rep();
                   double dual = 0.0;
                   double closed = 0.0;
                   for (const auto& q : qa_samples(cfg, 50)) {
                     const QAAlgebra qa = make_qa(q.e);
                     const TorsionReport tr = star_d_omega(rep, qa.algebra(), q.eta, 1e300);
                     dual = std::max(dual, tr.residuals.dual_path);
                     const Split3<double> parts = project3(tr.omega, tr.star_d_omega);
                     const PureComponents pc = clasiqab_closed_form(rep, q.e, q.eta);
                     closed = std::max({closed, max_abs(parts.b48 - pc.c48), max_abs(parts.b8 - pc.c8)});
                   }
                   r.residual = std::max(dual, closed);
                   r.passed = r.residual <= r.threshold;
                   r.detail = "spinorial vs CE " + fmt(dual) + ", project3 vs closed formulas " + fmt(closed);
                 });
}

CriterionResult criterion_examples(const SuiteConfig& cfg) {
  return guarded(make(7, "worked examples: nilmanifold and mapping torus", false, 1e-12 * scale(cfg)),
                 [&](CriterionResult& r) {
                   const GammaRep rep = build_cl8_rep();
                   const QAReport nil = classify_qa(rep, nilpotent_example(), cfg.tolerance);
                   const bool nil_ok = nil.admits_balanced && nil.admits_mixed == Verdict::Yes && !nil.admits_parallel &&
                                       !nil.admits_lcp_nonparallel;
                   const QAReport rot = classify_qa(rep, rotation_example(), cfg.tolerance);
                   const double curv = curvature(make_qa(rotation_example()).algebra()).max_abs();
                   const Mat8 x = exp_tE(rotation_example(), M_PI);
                   const double integral = (x - x.array().round().matrix()).cwiseAbs().maxCoeff();
                   const bool rot_ok = rot.admits_parallel && rot.admits_mixed == Verdict::Yes;
                   r.residual = std::max(curv, integral);
                   r.passed = nil_ok && rot_ok && curv <= r.threshold && integral <= r.threshold;
                   r.detail = std::string("nilmanifold ") + (nil_ok ? "balanced+mixed" : "WRONG") + ", mapping torus " +
                              (rot_ok ? "parallel+mixed" : "WRONG") + ", max|R| " + fmt(curv) +
                              ", exp(pi E) integrality defect " + fmt(integral);
                 });
}

CriterionResult criterion_characteristic(const SuiteConfig& cfg) {
  return guarded(make(8, "characteristic connection torsion", false, 1e-9 * scale(cfg)), [&](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    struct Case {
      LieAlgebra8<double> g;
      Spinor16<double> eta;
    };
    std::vector<Case> cases;
    for (const auto& q : qa_samples(cfg, 50)) cases.push_back({make_qa(q.e).algebra(), q.eta});
    for (const Mat7& e : {nilpotent_example(), rotation_example()}) {
      const QAReport rp = classify_qa(rep, e, cfg.tolerance);
      for (const auto& w : rp.witnesses) cases.push_back({make_qa(e).algebra(), w.eta});
    }
    double lift = 0.0;
    double agree = 0.0;
    for (const auto& c : cases) {
      const TorsionReport tr = star_d_omega(rep, c.g, c.eta, 1e300);
      const KForm<double> t = characteristic_torsion(tr.omega, tr.star_d_omega, tr.theta, c.g, 1e300);
      agree = std::max(agree, max_abs(t - (tr.star_d_omega - (4.0 / 3.0) * tr.gamma8)));
      lift = std::max(lift, characteristic_check(rep, c.g, c.eta, t));
    }
    r.residual = std::max(lift, agree);
    r.passed = r.residual <= r.threshold;
    r.detail = std::to_string(cases.size()) + " structures, max |nabla eta + T eta/4| " + fmt(lift) +
               ", formula agreement " + fmt(agree);
  });
}

CriterionResult criterion_lee_form(const SuiteConfig& cfg) {
  return guarded(make(9, "Lee form from the Lambda^5_8 part of dOmega", false, 1e-9 * scale(cfg)),
                 [&](CriterionResult& r) {
                   const GammaRep rep = build_cl8_rep();
                   double worst = 0.0;
                   for (const auto& q : qa_samples(cfg, 50)) {
                     const LieAlgebra8<double> g = make_qa(q.e).algebra();
                     const TorsionReport tr = star_d_omega(rep, g, q.eta, 1e300);
                     const KForm<double> d_omega = ce_differential(g, tr.omega.omega);
                     const KForm<double> theta = lee_form_from_d_omega(tr.omega, d_omega);
                     worst = std::max(worst, max_abs(theta - tr.theta));
                   }
                   r.residual = worst;
                   r.passed = worst <= r.threshold;
                   r.detail = "max |theta_Lee - (8/7) V| " + fmt(worst);
                 });
}

CriterionResult criterion_g2_table(const SuiteConfig& cfg) {
  return guarded(make(10, "G2-frame constraint table", false, 1e-10 * scale(cfg)), [&](CriterionResult& r) {
    const GammaRep rep = build_cl8_rep();
    const KForm<double> psi = psi_from_omega(omega_from_spinor(rep, base_spinor<double>()), basis_vec8<double>(0));
    Sampler s(cfg.seed ^ 0x10ULL);
    const int trials = 100;
    double worst_hold = 0.0;
    double worst_fraction = 2.0;
    std::string weakest;
    for (AmbientClass ambient : {AmbientClass::Parallel, AmbientClass::Lcp, AmbientClass::Balanced}) {
      const auto rels = g2type_constraints(ambient);
      std::vector<int> broken(rels.size(), 0);
      for (int t = 0; t < trials; ++t) {
        HypersurfaceData base;
        base.s = decompose_endo(psi, s.matrix());
        base.mean_curvature = s.uniform();
        const Mat7 w = s.matrix();
        base.w3 = 0.5 * (w + w.transpose()) - (w.trace() / 7.0) * Mat7::Identity();
        for (int i = 0; i < 7; ++i) base.u(i) = s.uniform();

        HypersurfaceData all = base;
        for (const auto& rel : rels) rel.enforce(all);
        double res = 0.0;
        for (const auto& rel : rels) res = std::max(res, rel.residual(all));
        const double hold = std::max(res, ambient_target(ambient, pure_components(psi, hypersurface_frame_data(all))));
        worst_hold = std::max(worst_hold, hold);

        for (std::size_t drop = 0; drop < rels.size(); ++drop) {
          HypersurfaceData d = base;
          for (std::size_t k = 0; k < rels.size(); ++k)
            if (k != drop) rels[k].enforce(d);
          if (ambient_target(ambient, pure_components(psi, hypersurface_frame_data(d))) > 1e-4) ++broken[drop];
        }
      }
      for (std::size_t k = 0; k < rels.size(); ++k) {
        const double f = static_cast<double>(broken[k]) / trials;
        if (f < worst_fraction) {
          worst_fraction = f;
          weakest = to_string(ambient) + ":" + rels[k].name;
        }
      }
    }
    r.residual = worst_hold;
    r.passed = worst_hold <= r.threshold && worst_fraction >= 0.95;
    r.detail = "max component with all relations " + fmt(worst_hold) + "; weakest dropped relation " + weakest +
               " breaks in " + std::to_string(static_cast<int>(std::lround(100 * worst_fraction))) + "% of trials";
  });
}

CriterionResult criterion_unimodular(const SuiteConfig& cfg) {
  return guarded(make(11, "unimodular algebras admit no strict lcp structure", false, cfg.tolerance),
                 [&](CriterionResult& r) {
                   const GammaRep rep = build_cl8_rep();
                   Sampler s(cfg.seed ^ 0x11ULL);
                   int flagged = 0;
                   int obstruction_missed = 0;
                   for (int n = 0; n < 100; ++n) {
                     Mat7 e = s.matrix();
                     if (n % 2 == 1) {
                       // Trace-zero perturbation of an lcp candidate h Id + K.
                       const double h = s.uniform(0.5, 2.0);
                       e = h * Mat7::Identity() + s.skew();
                       e(0, 0) -= 7.0 * h;
                     }
                     e -= (e.trace() / 7.0) * Mat7::Identity();
                     const QAReport rp = classify_qa(rep, e, cfg.tolerance);
                     if (rp.admits_lcp_nonparallel) ++flagged;
                     if (!solv_obstruction(e, cfg.tolerance)) ++obstruction_missed;
                   }
                   r.passed = flagged == 0 && obstruction_missed == 0;
                   r.detail = std::to_string(flagged) + "/100 flagged lcp_nonparallel, " +
                              std::to_string(obstruction_missed) + " not recognised as unimodular";
                 });
}

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg) {
  return {criterion_representation(cfg), criterion_omega(cfg),     criterion_eigenvalues(cfg),
          criterion_c_map(cfg),          criterion_determinant(cfg), criterion_dual_path(cfg),
          criterion_examples(cfg),       criterion_characteristic(cfg), criterion_lee_form(cfg),
          criterion_g2_table(cfg),       criterion_unimodular(cfg)};
}

}  // namespace spin7
