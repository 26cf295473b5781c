#ifndef HPSPHERE_ORBIT_HPP
#define HPSPHERE_ORBIT_HPP

#include <complex>
#include <vector>

#include "hpsphere/irreps.hpp"
#include "hpsphere/quaternion.hpp"

namespace hpsphere {

/// Torus-fixed orbit seed z = sum_alpha c_alpha u_{lambda,alpha} for a positive
/// odd weight lambda.  Coefficients are normalized so |z| = 1; c_alpha may be
/// zero only on blocks that do not contain the weight.
class BasePoint {
 public:
  BasePoint(RepSum rep, int lambda, std::vector<Complex> c);

  const RepSum& rep() const { return rep_; }
  int weight() const { return lambda_; }
  const std::vector<Complex>& coefficients() const { return c_; }

  /// The packed quaternionic vector z.
  QuatVector vector() const;

 private:
  RepSum rep_;
  int lambda_;
  std::vector<Complex> c_;
};

/// X = zA - ell z, Y = -zB, ell = (zA, z), all at g = identity.
struct TangentData {
  QuatVector X;
  QuatVector Y;
  Quaternion ell;
  Quaternion p_candidate;  // (zAB - (ell z)B, z)
};

TangentData tangent_data(const BasePoint& z);

/// K = 4 / (|X|^2 + |Y|^2).  Throws DegenerateOrbit when the denominator vanishes.
double closed_form_curvature(const BasePoint& z);

/// Distance of zAB - (ell z)B from the quaternionic line through z, after the
/// left unit-complex rotation that makes ell' real.  Zero iff the orbit is minimal.
double minimality_residual(const BasePoint& z);

/// Recover the weight form from q*z for a unit quaternion q: left-multiply by
/// (conj c - d j) on the dominant slot, renormalize, and rotate ell' real.
BasePoint renormalize_gauge(const RepSum& rep, int lambda, const QuatVector& v);

/// Unit vector z . rho(chart_section(w)) in H^{n+1}.
QuatVector immerse(const BasePoint& z, Complex w);

struct MetricSample {
  Complex w{0.0, 0.0};
  double g_xx = 0.0;
  double g_xy = 0.0;
  double g_yy = 0.0;
  double conformal_factor = 0.0;

  /// max(|g_xy|, |g_xx - g_yy|) / g_xx.
  double conformality_residual() const;
};

/// Pullback metric by central differences of immerse and the projection
/// P(v) = v - (v, Z) Z.
MetricSample numeric_metric(const BasePoint& z, Complex w, double h = 1e-5);

/// Gauss curvature K = -(1/(2 L)) Laplacian(log L), L the conformal factor,
/// via a 5-point stencil of spacing h.  Throws NotConformal when the metric at
/// w fails the conformality tolerance.
double numeric_curvature(const BasePoint& z, Complex w, double h = 1e-2);

/// Residual between the finite-difference derivative of immerse and the
/// Maurer-Cartan assembly (i omega) zH + phi zA - conj(phi) zB, maximized over
/// the two chart coordinate directions.
double derivative_consistency(const BasePoint& z, Complex w, double h = 1e-5);

/// Aggregated verification numbers for one orbit.
struct CurvatureReport {
  double K_closed = 0.0;
  double K_numeric_mean = 0.0;
  double K_numeric_std = 0.0;
  double K_numeric_spread = 0.0;
  double minimality_residual = 0.0;
  double conformality_residual = 0.0;
};

namespace detail {
/// Shared tangent computation on a prebuilt ladder; used by the classifier's
/// brute-force sweep where the ladder is reused across many coefficient grids.
struct TangentSums {
  double xy_norm2 = 0.0;  // |X|^2 + |Y|^2
  Quaternion ell;
};
TangentSums tangent_sums(const QuatVector& z, const LadderOps& ops);
double minimality_residual(const QuatVector& z, const LadderOps& ops);
}  // namespace detail

}  // namespace hpsphere

#endif  // HPSPHERE_ORBIT_HPP
