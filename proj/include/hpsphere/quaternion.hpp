#ifndef HPSPHERE_QUATERNION_HPP
#define HPSPHERE_QUATERNION_HPP

#include <complex>

#include <Eigen/Dense>

#include "hpsphere/errors.hpp"

namespace hpsphere {

using Complex = std::complex<double>;

/// Quaternion in the complex-pair encoding q = a + b*j, with j*c = conj(c)*j
/// for every complex c.  Hence (a + b j)(c + d j) = (ac - b conj(d)) + (ad + b conj(c)) j.
struct Quaternion {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};

  Quaternion() = default;
  Quaternion(Complex a_, Complex b_) : a(a_), b(b_) {}
  explicit Quaternion(double real) : a(real, 0.0) {}

  static Quaternion one() { return Quaternion(Complex(1.0, 0.0), Complex(0.0, 0.0)); }
  static Quaternion i() { return Quaternion(Complex(0.0, 1.0), Complex(0.0, 0.0)); }
  static Quaternion j() { return Quaternion(Complex(0.0, 0.0), Complex(1.0, 0.0)); }
  static Quaternion k() { return Quaternion(Complex(0.0, 0.0), Complex(0.0, 1.0)); }

  double norm2() const { return std::norm(a) + std::norm(b); }
  double norm() const { return std::sqrt(norm2()); }
};

inline Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * std::conj(q.b), p.a * q.b + p.b * std::conj(q.a)};
}

inline Quaternion qconj(const Quaternion& q) { return {std::conj(q.a), -q.b}; }

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b};
}
inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b};
}
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return qmul(p, q); }
inline Quaternion operator*(double s, const Quaternion& q) { return {s * q.a, s * q.b}; }

/// Vector in H^m, coordinates v_k = a_k + b_k * j.
class QuatVector {
 public:
  Eigen::VectorXcd a;
  Eigen::VectorXcd b;

  QuatVector() = default;
  explicit QuatVector(Eigen::Index m) : a(Eigen::VectorXcd::Zero(m)), b(Eigen::VectorXcd::Zero(m)) {}
  QuatVector(Eigen::VectorXcd a_, Eigen::VectorXcd b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) throw DimensionError("QuatVector: component length mismatch");
  }

  Eigen::Index size() const { return a.size(); }

  double norm2() const { return a.squaredNorm() + b.squaredNorm(); }
  double norm() const { return std::sqrt(norm2()); }

  /// Packed complex coordinate row (a_0..a_{m-1}, b_0..b_{m-1}).
  Eigen::RowVectorXcd packed() const {
    Eigen::RowVectorXcd r(2 * a.size());
    r << a.transpose(), b.transpose();
    return r;
  }
  static QuatVector from_packed(const Eigen::RowVectorXcd& r) {
    const Eigen::Index m = r.size() / 2;
    return QuatVector(r.head(m).transpose(), r.tail(m).transpose());
  }
};

inline QuatVector operator+(const QuatVector& v, const QuatVector& w) {
  if (v.size() != w.size()) throw DimensionError("QuatVector +: length mismatch");
  return QuatVector(v.a + w.a, v.b + w.b);
}
inline QuatVector operator-(const QuatVector& v, const QuatVector& w) {
  if (v.size() != w.size()) throw DimensionError("QuatVector -: length mismatch");
  return QuatVector(v.a - w.a, v.b - w.b);
}

/// Left quaternion scalar multiplication q*v through the complex-pair rule.
inline QuatVector operator*(const Quaternion& q, const QuatVector& v) {
  return QuatVector(q.a * v.a - q.b * v.b.conjugate(), q.a * v.b + q.b * v.a.conjugate());
}

/// (z, w) = sum_A z_A conj(w_A); left-linear in z, qinner(z,z) real >= 0.
inline Quaternion qinner(const QuatVector& z, const QuatVector& w) {
  if (z.size() != w.size()) throw DimensionError("qinner: length mismatch");
  const Complex ca = w.a.dot(z.a) + w.b.dot(z.b);  // Eigen dot conjugates its callee
  const Complex cb = (z.b.array() * w.a.array()).sum() - (z.a.array() * w.b.array()).sum();
  return {ca, cb};
}

/// Matrix over H, entries M_kl = a_kl + b_kl * j, applied to row vectors on the right.
class QuatMatrix {
 public:
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd b;

  QuatMatrix() = default;
  QuatMatrix(Eigen::MatrixXcd a_, Eigen::MatrixXcd b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      throw DimensionError("QuatMatrix: component shape mismatch");
  }

  static QuatMatrix identity(Eigen::Index m) {
    return QuatMatrix(Eigen::MatrixXcd::Identity(m, m), Eigen::MatrixXcd::Zero(m, m));
  }

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index cols() const { return a.cols(); }

  /// Quaternionic conjugate transpose M*.
  QuatMatrix adjoint() const { return QuatMatrix(a.adjoint(), -b.transpose()); }
};

/// Row-vector right action: (v M)_l = sum_k v_k M_kl.
inline QuatVector qmatapply(const QuatVector& v, const QuatMatrix& M) {
  if (v.size() != M.rows()) throw DimensionError("qmatapply: dimension mismatch");
  Eigen::VectorXcd oa = (v.a.transpose() * M.a - v.b.transpose() * M.b.conjugate()).transpose();
  Eigen::VectorXcd ob = (v.a.transpose() * M.b + v.b.transpose() * M.a.conjugate()).transpose();
  return QuatVector(std::move(oa), std::move(ob));
}

/// Quaternionic matrix product (row convention: apply M then N).
inline QuatMatrix qmatmul(const QuatMatrix& M, const QuatMatrix& N) {
  if (M.cols() != N.rows()) throw DimensionError("qmatmul: dimension mismatch");
  return QuatMatrix(M.a * N.a - M.b * N.b.conjugate(), M.a * N.b + M.b * N.a.conjugate());
}

/// Max-norm residual of the symplectic-unitary test M M* = I.
inline double symplectic_residual(const QuatMatrix& M) {
  const QuatMatrix P = qmatmul(M, M.adjoint());
  const Eigen::Index m = M.rows();
  double r = (P.a - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  return std::max(r, P.b.cwiseAbs().maxCoeff());
}

}  // namespace hpsphere

#endif  // HPSPHERE_QUATERNION_HPP
