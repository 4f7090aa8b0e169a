#pragma once

// G2 structure on D = <e_0>^perp = span(e_1..e_7), with N = e_0.
// Matrices and vectors on D are 7-dimensional: index a in 0..6 stands for e_{a+1}.

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "spin7/geometry.hpp"

namespace spin7 {

using Mat7 = Eigen::Matrix<double, 7, 7>;
using Vec7 = Eigen::Matrix<double, 7, 1>;

// Psi = i(n) Omega, checked against Omega = n^Psi + *_D Psi (with *_D Psi = *(n^Psi)).
KForm<double> psi_from_omega(const Spin7Form<double>& omega, const Vec8<double>& n, double tol = 1e-12);

// Psi(e_{a+1}, e_{b+1}, e_{c+1}).
double psi_value(const KForm<double>& psi, int a, int b, int c);

// Matrix of X -> X x s, where g(X x Y, Z) = Psi(X, Y, Z).
Mat7 cross_matrix(const KForm<double>& psi, const Vec7& s);

// beta(X, Y) = g(m X, Y) as a 2-form on D.
KForm<double> two_form_of(const Mat7& m);
KForm<double> one_form_of(const Vec7& v);
Vec8<double> lift(const Vec7& v);

struct EndoDecomp {
  double lam = 0.0;
  Mat7 s2 = Mat7::Zero();
  Mat7 s3 = Mat7::Zero();
  Vec7 svec = Vec7::Zero();

  Mat7 reassemble(const KForm<double>& psi) const;
};

// lam = tr/7, s3 = sym - lam Id, svec is the Frobenius projection of skew(m) onto
// {X -> X x v}: svec_j = -<beta_skew, i(e_j) Psi>/3 in the g(mX, Y) convention; s2 is the remainder.
EndoDecomp decompose_endo(const KForm<double>& psi, const Mat7& m);

struct FrameData {
  double mu = 0.0;
  Mat7 a2 = Mat7::Zero();
  Mat7 a3 = Mat7::Zero();
  Vec7 avec = Vec7::Zero();
  Vec7 uvec = Vec7::Zero();
};

// A = mu Id + a2 + a3 + (X -> X x avec).
Mat7 frame_endomorphism(const KForm<double>& psi, const FrameData& fd);

// alt of the tensor Psi(a3 X, Y, Z) on D.
KForm<double> beta3_form(const KForm<double>& psi, const Mat7& a3);

struct PureComponents {
  KForm<double> c48{3};
  KForm<double> c8{3};
};

// c48 = (2/7)(-4 i(A+U)(N^Psi) + 3 i(A+U)*_D Psi) + 4 N^beta2 - 6 beta3,
// c8  = (8/7) i(U - 6A + 7 mu N)(N^Psi + *_D Psi),
// beta2(X,Y) = g(a2 X, Y), beta3 = alt(Psi(a3 X, Y, Z)).
PureComponents pure_components(const KForm<double>& psi, const FrameData& fd);

// |sum_i X_i A(X_i) eta - (-7 mu eta - 6 N avec eta)| over the frame of D.
double dirac_identity(const GammaRep& rep, const Spinor16<double>& eta, const FrameData& fd);

// FrameData of an invariant spinor on a metric Lie algebra: nabla_X eta = N A(X) eta on D and
// nabla_N eta = -N U eta.
FrameData frame_data_from_algebra(const GammaRep& rep, const LieAlgebra8<double>& g, const Spinor16<double>& eta);

enum class ScenarioKind { Hypersurface, PrincipalBundle, SpinCone, WarpedBase };

ScenarioKind parse_scenario_kind(const std::string& name);
std::string to_string(ScenarioKind kind);

struct ScenarioParams {
  EndoDecomp s;                  // G2 endomorphism of the base / hypersurface
  double mean_curvature = 0.0;   // H, with W = 7H Id + W3
  Mat7 w3 = Mat7::Zero();        // traceless symmetric part of the Weingarten operator
  Vec7 u = Vec7::Zero();         // hypersurface: external U
  Mat7 lbar = Mat7::Zero();      // principal bundle: skew matrix of the curvature 2-form
  double f = 0.0;                // spin cone: warping exponent at the point
  double f_prime = 0.0;          // spin cone: f'(t0)
  Vec7 grad_f = Vec7::Zero();    // warped base: grad f
};

FrameData scenario(ScenarioKind kind, const ScenarioParams& params, const KForm<double>& psi);

enum class AmbientClass { Parallel, Lcp, Balanced };

AmbientClass parse_ambient_class(const std::string& name);
std::string to_string(AmbientClass c);

struct HypersurfaceData {
  EndoDecomp s;
  double mean_curvature = 0.0;
  Mat7 w3 = Mat7::Zero();
  Vec7 u = Vec7::Zero();
};

struct Relation {
  std::string name;
  std::function<void(HypersurfaceData&)> enforce;
  std::function<double(const HypersurfaceData&)> residual;
};

std::vector<Relation> g2type_constraints(AmbientClass ambient);

FrameData hypersurface_frame_data(const HypersurfaceData& d);

// Size of the pure component(s) that the ambient class forces to vanish.
double ambient_target(AmbientClass ambient, const PureComponents& pc);

}  // namespace spin7
