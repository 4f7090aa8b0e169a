#include "spin7/spin7_structure.hpp"

#include <cmath>

namespace spin7 {

template <class T>
KForm<T> cayley_omega() {
  struct Term {
    MultiIndex idx;
    int sign;
  };
  const Term terms[] = {
      {{0, 1, 2, 3}, 1},  {{0, 1, 4, 5}, -1}, {{0, 1, 6, 7}, -1}, {{0, 2, 4, 6}, -1}, {{0, 2, 5, 7}, 1},
      {{0, 3, 4, 7}, -1}, {{0, 3, 5, 6}, -1}, {{4, 5, 6, 7}, 1},  {{2, 3, 6, 7}, -1}, {{2, 3, 4, 5}, -1},
      {{1, 3, 5, 7}, -1}, {{1, 3, 4, 6}, 1},  {{1, 2, 5, 6}, -1}, {{1, 2, 4, 7}, -1},
  };
  KForm<T> omega(4);
  for (const auto& t : terms) omega.add(t.idx, T(t.sign));
  return omega;
}

namespace {

template <class T>
void require_unit_positive(const Spinor16<T>& eta) {
  const T n2 = spinor_inner(eta, eta);
  bool ok;
  if constexpr (ScalarTraits<T>::exact) {
    ok = n2 == T(1) && negative_block_max(eta) == 0.0;
  } else {
    ok = std::fabs(n2 - 1.0) <= 1e-12 && negative_block_max(eta) <= 1e-12;
  }
  if (!ok) throw PreconditionError("spinor must be a unit vector of Delta+");
}

template <class T>
bool small(const T& x, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)tol;
    return is_zero(x);
  } else {
    return std::fabs(x) <= tol;
  }
}

}  // namespace

template <class T>
Spin7Form<T> omega_from_spinor(const GammaRep& rep, const Spinor16<T>& eta) {
  require_unit_positive(eta);
  KForm<T> omega(4);
  for (MultiIndex idx : multi_indices(4)) {
    const auto a = idx.axes();
    Spinor16<T> v = eta;
    for (int p = 3; p >= 0; --p) v = gamma_apply(rep, a[p], v);
    omega.add(idx, T(-spinor_inner(v, eta)));
  }
  return {omega, eta};
}

template <class T>
Vec8<T> triple_cross(const GammaRep& rep, const Spinor16<T>& eta, const Vec8<T>& x, const Vec8<T>& y,
                     const Vec8<T>& z) {
  const KForm<T> xyz = wedge(KForm<T>::one_form(x), wedge(KForm<T>::one_form(y), KForm<T>::one_form(z)));
  return solve_clifford_vector(rep, eta, form_action(rep, xyz, eta));
}

KForm<double> omega_in_frame(const KForm<double>& omega, const CayleyFrame& frame) {
  KForm<double> out(4);
  for (MultiIndex idx : multi_indices(4)) {
    const auto a = idx.axes();
    out.add(idx, evaluate(omega, {frame.e[a[0]], frame.e[a[1]], frame.e[a[2]], frame.e[a[3]]}));
  }
  return out;
}

Spinor16<double> frame_volume_action(const GammaRep& rep, const CayleyFrame& frame, const Spinor16<double>& eta) {
  Spinor16<double> v = eta;
  for (int i = 7; i >= 0; --i) v = clifford_mul(rep, frame.e[i], v);
  return v;
}

CayleyFrame cayley_frame(const GammaRep& rep, const Spinor16<double>& eta, const Vec8<double>& e0,
                         const Vec8<double>& e1, const Vec8<double>& e2, const Vec8<double>& e4, double tol) {
  const std::array<const Vec8<double>*, 4> given{&e0, &e1, &e2, &e4};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) {
      double d = 0;
      for (int k = 0; k < 8; ++k) d += (*given[a])[k] * (*given[b])[k];
      if (std::fabs(d - (a == b ? 1.0 : 0.0)) > tol) throw PreconditionError("cayley_frame inputs must be orthonormal");
    }
  auto neg = [](Vec8<double> v) {
    for (auto& x : v) x = -x;
    return v;
  };
  CayleyFrame f;
  f.e[0] = e0;
  f.e[1] = e1;
  f.e[2] = e2;
  f.e[3] = neg(triple_cross(rep, eta, e0, e1, e2));
  double d34 = 0;
  for (int k = 0; k < 8; ++k) d34 += f.e[3][k] * e4[k];
  if (std::fabs(d34) > tol) throw PreconditionError("e4 must be orthogonal to e0 x e1 x e2");
  f.e[4] = e4;
  f.e[5] = triple_cross(rep, eta, e0, e1, e4);
  f.e[6] = triple_cross(rep, eta, e0, e2, e4);
  f.e[7] = triple_cross(rep, eta, e0, e1, f.e[6]);

  const KForm<double> expected = cayley_omega<double>();
  const KForm<double> got = omega_in_frame(omega_from_spinor(rep, eta).omega, f);
  if (max_abs(got - expected) > tol) throw ConventionError("completed frame does not realize the Cayley pattern");
  return f;
}

template <class T>
KForm<T> lambda2_operator(const KForm<T>& omega, const KForm<T>& b) {
  if (b.degree() != 2) throw DegreeError("expected a 2-form");
  return hodge(wedge(b, omega));
}

template <class T>
Split2<T> project2(const Spin7Form<T>& omega, const KForm<T>& b) {
  const KForm<T> t = lambda2_operator(omega.omega, b);
  const T quarter = T(1) / T(4);
  return {quarter * (b + t), quarter * (T(3) * b - t)};
}

template <class T>
Vec8<T> lambda3_8_vector(const Spin7Form<T>& omega, const KForm<T>& b) {
  if (b.degree() != 3) throw DegreeError("expected a 3-form");
  std::array<KForm<T>, 8> basis;
  for (int j = 0; j < 8; ++j) basis[j] = contract_axis(j, omega.omega);
  DenseMatrix<T> gram = dense_zero<T>(8, 8);
  std::vector<T> rhs(8);
  for (int j = 0; j < 8; ++j) {
    rhs[j] = inner(basis[j], b);
    for (int k = 0; k < 8; ++k) gram[j][k] = inner(basis[j], basis[k]);
  }
  const auto x = solve(gram, rhs);
  Vec8<T> v;
  for (int j = 0; j < 8; ++j) v[j] = x[j];
  return v;
}

template <class T>
Split3<T> project3(const Spin7Form<T>& omega, const KForm<T>& b) {
  const Vec8<T> x = lambda3_8_vector(omega, b);
  KForm<T> b8 = contract(x, omega.omega);
  return {b8, b - b8};
}

template <class T>
Spinor16<T> c_map(const GammaRep& rep, const Spin7Form<T>& omega, const KForm<T>& b, bool check, double tol) {
  if (b.degree() != 2) throw DegreeError("c_map expects a 2-form");
  if (check) {
    const auto parts = project2(omega, b);
    for (const auto& [idx, c] : parts.b21.terms())
      if (!small(c, tol)) throw PreconditionError("c_map argument is not in Lambda^2_7");
  }
  return form_action(rep, b, omega.eta);
}

template <class T>
KForm<T> c_inverse(const GammaRep& rep, const Spinor16<T>& eta, const Spinor16<T>& phi, double tol) {
  if (!small(spinor_inner(phi, eta), tol) || !small(T(negative_block_max(phi)), tol))
    throw PreconditionError("c_inverse expects phi in Delta+ orthogonal to eta");
  KForm<T> out(2);
  const T quarter = T(1) / T(4);
  for (MultiIndex idx : multi_indices(2)) {
    const auto a = idx.axes();
    const Spinor16<T> v = gamma_apply(rep, a[0], gamma_apply(rep, a[1], eta));
    out.add(idx, T(quarter * spinor_inner(phi, v)));
  }
  return out;
}

template <class T>
KForm<T> theta_xi(const Spin7Form<T>& omega, const KForm<T>& b) {
  if (b.degree() != 3) throw DegreeError("theta_xi expects a 3-form");
  KForm<T> out(3);
  for (int j = 0; j < 8; ++j) {
    const KForm<T> p7 = project2(omega, contract_axis(j, b)).b7;
    out += wedge(KForm<T>::monomial(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << j))), p7);
  }
  return out;
}

template <class T>
KForm<T> so8_action(int a, int b, const KForm<T>& form) {
  // E e_b = e_a, E e_a = -e_b; on covectors E.e^a = -e^b and E.e^b = e^a.
  KForm<T> out(form.degree());
  for (const auto& [idx, c] : form.terms()) {
    auto axes = idx.axes();
    for (std::size_t p = 0; p < axes.size(); ++p) {
      const int old = axes[p];
      if (old != a && old != b) continue;
      const int repl = old == a ? b : a;
      const T factor = old == a ? T(-c) : c;
      axes[p] = repl;
      MultiIndex sorted;
      const int s = sort_sign(axes, &sorted);
      if (s != 0) out.add(sorted, s > 0 ? factor : T(-factor));
      axes[p] = old;
    }
  }
  return out;
}

template <class T>
int stabilizer_dimension(const KForm<T>& omega) {
  DenseMatrix<T> m;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) m.push_back(form_coords(so8_action(a, b, omega)));
  return 28 - rank(m);
}

template <class T>
Vec8<T> vector_of(const KForm<T>& one_form) {
  if (one_form.degree() != 1) throw DegreeError("expected a 1-form");
  Vec8<T> v;
  for (int i = 0; i < 8; ++i) v[i] = one_form.coeff(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << i)));
  return v;
}

template <class T>
KForm<T> characteristic_torsion(const Spin7Form<T>& omega, const KForm<T>& star_d_omega, const KForm<T>& theta,
                                const LieAlgebra8<T>& g, double tol) {
  const KForm<T> delta_omega = codifferential(g, omega.omega);
  const KForm<T> t1 = -delta_omega - (T(7) / T(6)) * hodge(wedge(theta, omega.omega));
  Vec8<T> v = vector_of(theta);
  for (auto& x : v) x *= T(7) / T(8);
  const KForm<T> t2 = star_d_omega - (T(4) / T(3)) * contract(v, omega.omega);
  const double diff = max_abs(t1 - t2);
  if (ScalarTraits<T>::exact ? diff != 0.0 : diff > tol)
    throw InconsistencyError("characteristic torsion formulas disagree");
  return t1;
}

#define SPIN7_INSTANTIATE(T)                                                                                   \
  template KForm<T> cayley_omega<T>();                                                                         \
  template Spin7Form<T> omega_from_spinor(const GammaRep&, const Spinor16<T>&);                                \
  template Vec8<T> triple_cross(const GammaRep&, const Spinor16<T>&, const Vec8<T>&, const Vec8<T>&,           \
                                const Vec8<T>&);                                                               \
  template KForm<T> lambda2_operator(const KForm<T>&, const KForm<T>&);                                        \
  template Split2<T> project2(const Spin7Form<T>&, const KForm<T>&);                                           \
  template Split3<T> project3(const Spin7Form<T>&, const KForm<T>&);                                           \
  template Vec8<T> lambda3_8_vector(const Spin7Form<T>&, const KForm<T>&);                                     \
  template Spinor16<T> c_map(const GammaRep&, const Spin7Form<T>&, const KForm<T>&, bool, double);             \
  template KForm<T> c_inverse(const GammaRep&, const Spinor16<T>&, const Spinor16<T>&, double);                \
  template KForm<T> theta_xi(const Spin7Form<T>&, const KForm<T>&);                                            \
  template KForm<T> so8_action(int, int, const KForm<T>&);                                                     \
  template int stabilizer_dimension(const KForm<T>&);                                                          \
  template Vec8<T> vector_of(const KForm<T>&);                                                                 \
  template KForm<T> characteristic_torsion(const Spin7Form<T>&, const KForm<T>&, const KForm<T>&,              \
                                           const LieAlgebra8<T>&, double);

SPIN7_INSTANTIATE(double)
SPIN7_INSTANTIATE(Rational)

#undef SPIN7_INSTANTIATE

}  // namespace spin7
