#ifndef HPSPHERE_SU2_HPP
#define HPSPHERE_SU2_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "hpsphere/errors.hpp"

namespace hpsphere {

using Complex = std::complex<double>;

/// Point (a, b) of SU(2); the associated matrix is [[a, b], [-conj b, conj a]].
struct GroupElement {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  GroupElement() = default;
  GroupElement(Complex a_, Complex b_) : a(a_), b(b_) {}

  static GroupElement identity() { return {}; }

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd g;
    g << a, b, -std::conj(b), std::conj(a);
    return g;
  }

  GroupElement inverse() const { return {std::conj(a), -b}; }

  /// |a|^2 + |b|^2 - 1.
  double unit_residual() const { return std::abs(std::norm(a) + std::norm(b) - 1.0); }
};

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return {g.a * h.a - g.b * std::conj(h.b), g.a * h.b + g.b * std::conj(h.a)};
}

/// Real coefficients over the su(2) basis
///   e1 = [[i,0],[0,-i]],  e2 = [[0,1],[-1,0]],  e3 = [[0,i],[i,0]].
struct AlgebraElement {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  AlgebraElement() = default;
  AlgebraElement(double x1_, double x2_, double x3_) : x1(x1_), x2(x2_), x3(x3_) {}

  static AlgebraElement e1() { return {1.0, 0.0, 0.0}; }
  static AlgebraElement e2() { return {0.0, 1.0, 0.0}; }
  static AlgebraElement e3() { return {0.0, 0.0, 1.0}; }

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd m;
    const Complex I(0.0, 1.0);
    m << I * x1, Complex(x2, x3), Complex(-x2, x3), -I * x1;
    return m;
  }

  AlgebraElement scaled(double t) const { return {t * x1, t * x2, t * x3}; }
};

/// Closed-form exponential: xi^2 = -theta^2 I with theta = |xi|, so
/// exp(xi) = cos(theta) I + sinc(theta) xi.
inline GroupElement exp_map(const AlgebraElement& xi) {
  const double theta = std::sqrt(xi.x1 * xi.x1 + xi.x2 * xi.x2 + xi.x3 * xi.x3);
  const double s = theta < 1e-12 ? 1.0 - theta * theta / 6.0 : std::sin(theta) / theta;
  return {Complex(std::cos(theta), s * xi.x1), Complex(s * xi.x2, s * xi.x3)};
}

/// Section of SU(2) -> SU(2)/T over the affine chart w of S^2:
/// a = 1/sqrt(1+|w|^2), b = w/sqrt(1+|w|^2).  Smooth on all of C.
inline GroupElement chart_section(Complex w) {
  const double s = 1.0 / std::sqrt(1.0 + std::norm(w));
  return {Complex(s, 0.0), w * s};
}

/// Haar-uniform elements via a normalized 4-dimensional Gaussian.
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed) : rng_(seed) {}

  GroupElement sample() {
    double x[4];
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& c : x) {
        c = gauss_(rng_);
        n2 += c * c;
      }
    } while (n2 < 1e-30);
    const double inv = 1.0 / std::sqrt(n2);
    return {Complex(x[0] * inv, x[1] * inv), Complex(x[2] * inv, x[3] * inv)};
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

inline GroupElement haar_sample(std::uint64_t seed) { return HaarSampler(seed).sample(); }

/// Components of Theta = dg g^{-1} at chart_section(w) along a chart direction,
/// per the su(2) shape [[i omega, phi], [-conj phi, -i omega]].
struct MaurerCartanSample {
  double omega = 0.0;
  Complex phi{0.0, 0.0};
  /// Deviation of the finite-difference Theta from the anti-Hermitian traceless shape.
  double off_pattern_residual = 0.0;
};

/// Central-difference Maurer-Cartan sample along t -> chart_section(w + t*direction).
inline MaurerCartanSample maurer_cartan(Complex w, Complex direction, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("maurer_cartan: step h must be positive");
  const Eigen::Matrix2cd gp = chart_section(w + h * direction).matrix();
  const Eigen::Matrix2cd gm = chart_section(w - h * direction).matrix();
  const Eigen::Matrix2cd theta =
      ((gp - gm) / (2.0 * h)) * chart_section(w).matrix().adjoint();
  MaurerCartanSample out;
  out.omega = theta(0, 0).imag();
  out.phi = theta(0, 1);
  out.off_pattern_residual = std::abs(theta(0, 0).real()) + std::abs(theta(0, 0) + theta(1, 1)) +
                             std::abs(theta(1, 0) + std::conj(theta(0, 1)));
  return out;
}

}  // namespace hpsphere

#endif  // HPSPHERE_SU2_HPP
