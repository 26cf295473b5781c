#include "hpsphere/orbit.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hpsphere {

namespace {
constexpr double kDegenerateTol = 1e-12;
constexpr double kConformalityTol = 1e-8;
}  // namespace

BasePoint::BasePoint(RepSum rep, int lambda, std::vector<Complex> c)
    : rep_(std::move(rep)), lambda_(lambda), c_(std::move(c)) {
  if (lambda_ < 1 || lambda_ % 2 == 0)
    throw WeightError("BasePoint: weight must be a positive odd integer");
  if (static_cast<int>(c_.size()) != rep_.block_count())
    throw DimensionError("BasePoint: one coefficient per block required");
  double n2 = 0.0;
  for (int alpha = 0; alpha < rep_.block_count(); ++alpha) {
    const bool in_block = rep_.contains_weight(alpha, lambda_);
    if (!in_block && std::abs(c_[alpha]) != 0.0)
      throw WeightError("BasePoint: nonzero coefficient on a block without the weight");
    if (in_block && std::abs(c_[alpha]) == 0.0)
      throw WeightError("BasePoint: zero coefficient on a block carrying the weight");
    n2 += std::norm(c_[alpha]);
  }
  if (n2 < kDegenerateTol) throw WeightError("BasePoint: zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& ca : c_) ca *= inv;
}

QuatVector BasePoint::vector() const {
  QuatVector v(rep_.total_m());
  for (int alpha = 0; alpha < rep_.block_count(); ++alpha)
    if (rep_.contains_weight(alpha, lambda_)) v.a(rep_.slot(alpha, lambda_)) = c_[alpha];
  return v;
}

namespace detail {

TangentSums tangent_sums(const QuatVector& z, const LadderOps& ops) {
  const QuatVector zA = apply_packed(z, ops.A);
  const Quaternion ell = qinner(zA, z);
  const QuatVector X = zA - ell * z;
  const QuatVector zB = apply_packed(z, ops.B);
  return {X.norm2() + zB.norm2(), ell};
}

double minimality_residual(const QuatVector& z_in, const LadderOps& ops) {
  QuatVector z = z_in;
  QuatVector zA = apply_packed(z, ops.A);
  Quaternion ell = qinner(zA, z);
  // Gauge: a left unit-complex rotation sends ell to e^{2 i tau} ell; pick tau
  // so that ell = (ell' i) j with ell' real (>= 0).
  if (std::abs(ell.b) > 1e-15) {
    const double tau = (std::numbers::pi / 2.0 - std::arg(ell.b)) / 2.0;
    z = Quaternion(std::polar(1.0, tau), 0.0) * z;
    zA = apply_packed(z, ops.A);
    ell = qinner(zA, z);
  }
  const QuatVector r = apply_packed(zA, ops.B) - apply_packed(ell * z, ops.B);
  const Quaternion p = qinner(r, z);
  return (r - p * z).norm();
}

}  // namespace detail

TangentData tangent_data(const BasePoint& z) {
  const LadderOps ops = ladder_ops(z.rep());
  const QuatVector v = z.vector();
  const QuatVector vA = apply_packed(v, ops.A);
  const Quaternion ell = qinner(vA, v);
  TangentData out;
  out.X = vA - ell * v;
  out.Y = Quaternion(-1.0) * apply_packed(v, ops.B);
  out.ell = ell;
  const QuatVector r = apply_packed(vA, ops.B) - apply_packed(ell * v, ops.B);
  out.p_candidate = qinner(r, v);
  return out;
}

double closed_form_curvature(const BasePoint& z) {
  const TangentData t = tangent_data(z);
  const double denom = t.X.norm2() + t.Y.norm2();
  if (denom < kDegenerateTol)
    throw DegenerateOrbit("closed_form_curvature: orbit degenerates to a point");
  return 4.0 / denom;
}

double minimality_residual(const BasePoint& z) {
  return detail::minimality_residual(z.vector(), ladder_ops(z.rep()));
}

BasePoint renormalize_gauge(const RepSum& rep, int lambda, const QuatVector& v) {
  // Pick the slot with the largest quaternionic coefficient among the weight
  // slots and kill its j-part by a left multiplication.
  int best = -1;
  double best_mag = 0.0;
  for (int alpha = 0; alpha < rep.block_count(); ++alpha) {
    if (!rep.contains_weight(alpha, lambda)) continue;
    const int s = rep.slot(alpha, lambda);
    const double mag = std::norm(v.a(s)) + std::norm(v.b(s));
    if (mag > best_mag) {
      best_mag = mag;
      best = s;
    }
  }
  if (best < 0 || best_mag < kDegenerateTol)
    throw WeightError("renormalize_gauge: no support on the weight slots");
  const Quaternion q(std::conj(v.a(best)), -v.b(best));
  const QuatVector w = q * v;
  std::vector<Complex> c(rep.block_count(), Complex(0.0, 0.0));
  double captured2 = 0.0;
  for (int alpha = 0; alpha < rep.block_count(); ++alpha)
    if (rep.contains_weight(alpha, lambda)) {
      c[alpha] = w.a(rep.slot(alpha, lambda));
      captured2 += std::norm(c[alpha]);
    }
  // A quaternion multiple of a weight vector lands entirely in the a-slots.
  if (captured2 < (1.0 - 1e-9) * w.norm2())
    throw WeightError("renormalize_gauge: input is not a quaternion multiple of a weight vector");
  return BasePoint(rep, lambda, std::move(c));
}

QuatVector immerse(const BasePoint& z, Complex w) {
  return apply_packed(z.vector(), packed_rep_matrix(chart_section(w), z.rep()));
}

double MetricSample::conformality_residual() const {
  if (g_xx <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(g_xy), std::abs(g_xx - g_yy)) / g_xx;
}

MetricSample numeric_metric(const BasePoint& z, Complex w, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_metric: step h must be positive");
  const QuatVector Z0 = immerse(z, w);
  const Complex Ih(0.0, h);
  const QuatVector dx =
      Quaternion(1.0 / (2.0 * h)) * (immerse(z, w + h) - immerse(z, w - h));
  const QuatVector dy =
      Quaternion(1.0 / (2.0 * h)) * (immerse(z, w + Ih) - immerse(z, w - Ih));
  const auto project = [&Z0](const QuatVector& v) { return v - qinner(v, Z0) * Z0; };
  const QuatVector px = project(dx);
  const QuatVector py = project(dy);
  MetricSample s;
  s.w = w;
  s.g_xx = px.norm2();
  s.g_yy = py.norm2();
  s.g_xy = qinner(px, py).a.real();
  s.conformal_factor = (s.g_xx + s.g_yy) / 2.0;
  return s;
}

double numeric_curvature(const BasePoint& z, Complex w, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_curvature: step h must be positive");
  const MetricSample center = numeric_metric(z, w);
  if (center.conformality_residual() > kConformalityTol)
    throw NotConformal("numeric_curvature: pullback metric is not conformal at w");
  const auto log_factor = [&](Complex wp) {
    return std::log(numeric_metric(z, wp).conformal_factor);
  };
  const Complex Ih(0.0, h);
  const double lap = (log_factor(w + h) + log_factor(w - h) + log_factor(w + Ih) +
                      log_factor(w - Ih) - 4.0 * std::log(center.conformal_factor)) /
                     (h * h);
  return -lap / (2.0 * center.conformal_factor);
}

double derivative_consistency(const BasePoint& z, Complex w, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("derivative_consistency: h must be positive");
  const LadderOps ops = ladder_ops(z.rep());
  const QuatVector v = z.vector();
  const QuatVector vH = apply_packed(v, ops.H);
  const QuatVector vA = apply_packed(v, ops.A);
  const QuatVector vB = apply_packed(v, ops.B);
  const Eigen::MatrixXcd rho = packed_rep_matrix(chart_section(w), z.rep());
  double res = 0.0;
  for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
    const QuatVector fd = Quaternion(1.0 / (2.0 * h)) *
                          (immerse(z, w + h * dir) - immerse(z, w - h * dir));
    const MaurerCartanSample mc = maurer_cartan(w, dir, h);
    const QuatVector alg = Quaternion(Complex(0.0, mc.omega), 0.0) * vH +
                           Quaternion(mc.phi, 0.0) * vA +
                           Quaternion(-std::conj(mc.phi), 0.0) * vB;
    res = std::max(res, (fd - apply_packed(alg, rho)).norm());
  }
  return res;
}

}  // namespace hpsphere
