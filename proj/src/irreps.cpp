#include "hpsphere/irreps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace hpsphere {

namespace {

// Integer power by repeated multiplication; std::pow(0+0i, 0) is NaN.
Complex cpow_int(Complex z, int k) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double basis_norm(int n, int k) { return std::sqrt(factorial(k) * factorial(n - k)); }

}  // namespace

PolyVector PolyVector::basis(int n, int k) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c(k) = 1.0;
  return {n, std::move(c)};
}

PolyVector PolyVector::monomial(int n, int k) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c(k) = basis_norm(n, k);
  return {n, std::move(c)};
}

PolyVector substitute_action(const GroupElement& g, const PolyVector& p) {
  const int n = p.degree;
  const Complex a = g.a, b = g.b;
  // f((z0,z1) g^{-1}) = f(conj(a) z0 + conj(b) z1, -b z0 + a z1).
  // Work on unnormalized monomial coefficients, convolve, renormalize.
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Complex c = p.coeffs(k) / basis_norm(n, k);
    if (c == Complex(0.0, 0.0)) continue;
    // (conj(a) z0 + conj(b) z1)^k expanded over z0^q1 z1^{k-q1}
    Eigen::VectorXcd t1(k + 1);
    for (int q1 = 0; q1 <= k; ++q1)
      t1(q1) = binomial(k, q1) * cpow_int(std::conj(a), q1) * cpow_int(std::conj(b), k - q1);
    // (-b z0 + a z1)^{n-k} over z0^q2 z1^{n-k-q2}
    Eigen::VectorXcd t2(n - k + 1);
    for (int q2 = 0; q2 <= n - k; ++q2)
      t2(q2) = binomial(n - k, q2) * cpow_int(-b, q2) * cpow_int(a, n - k - q2);
    for (int q1 = 0; q1 <= k; ++q1)
      for (int q2 = 0; q2 <= n - k; ++q2) out(q1 + q2) += c * t1(q1) * t2(q2);
  }
  for (int l = 0; l <= n; ++l) out(l) *= basis_norm(n, l);
  return {n, std::move(out)};
}

Eigen::MatrixXcd lambda_matrix(const GroupElement& g, int n) {
  const Complex a = g.a, b = g.b;
  Eigen::MatrixXcd lam(n + 1, n + 1);
  for (int l = 0; l <= n; ++l) {
    for (int k = 0; k <= n; ++k) {
      const double pref = std::sqrt(factorial(l) * factorial(n - l) /
                                    (factorial(k) * factorial(n - k)));
      Complex s(0.0, 0.0);
      for (int p = std::max(0, l - (n - k)); p <= std::min(l, k); ++p) {
        const int q = l - p;
        s += binomial(k, p) * binomial(n - k, q) * cpow_int(a, n - k - q) * cpow_int(-b, q) *
             cpow_int(std::conj(a), p) * cpow_int(std::conj(b), k - p);
      }
      lam(l, k) = pref * s;
    }
  }
  return lam;
}

double lambda_symmetry_residual(const Eigen::MatrixXcd& lambda) {
  const int n = static_cast<int>(lambda.rows()) - 1;
  double r = 0.0;
  for (int l = 0; l <= n; ++l)
    for (int k = 0; k <= n; ++k) {
      const double sign = ((k + l) % 2 == 0) ? 1.0 : -1.0;
      r = std::max(r, std::abs(lambda(l, k) - sign * std::conj(lambda(n - l, n - k))));
    }
  return r;
}

CompositionOrder detect_composition_order(int n, std::uint64_t seed) {
  HaarSampler sampler(seed);
  const GroupElement g1 = sampler.sample();
  const GroupElement g2 = sampler.sample();
  const Eigen::MatrixXcd l12 = lambda_matrix(g1 * g2, n);
  const Eigen::MatrixXcd lf = lambda_matrix(g1, n) * lambda_matrix(g2, n);
  const Eigen::MatrixXcd lr = lambda_matrix(g2, n) * lambda_matrix(g1, n);
  const double rf = (l12 - lf).cwiseAbs().maxCoeff();
  const double rr = (l12 - lr).cwiseAbs().maxCoeff();
  if (std::min(rf, rr) > 1e-10 || std::abs(rf - rr) < 1e-10)
    throw std::runtime_error("composition order probe is inconclusive");
  return rf < rr ? CompositionOrder::kForward : CompositionOrder::kReversed;
}

Eigen::MatrixXcd drho_generator(const AlgebraElement& eps, int n) {
  // v_k drho(eps) = -[(z eps)_0 d/dz0 + (z eps)_1 d/dz1] v_k with z = (z0, z1),
  // expanded monomial by monomial.  Column convention: entry (l, k) is the
  // coefficient of v_l in the image of v_k.
  const Eigen::Matrix2cd e = eps.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    const double nk = basis_norm(n, k);
    // z0 e00 d/dz0 and z1 e11 d/dz1 keep the monomial.
    out(k, k) += -(e(0, 0) * double(k) + e(1, 1) * double(n - k)) * nk / nk;
    // z1 e10 d/dz0 lowers the z0 degree.
    if (k > 0) out(k - 1, k) += -e(1, 0) * double(k) * basis_norm(n, k - 1) / nk;
    // z0 e01 d/dz1 raises it.
    if (k < n) out(k + 1, k) += -e(0, 1) * double(n - k) * basis_norm(n, k + 1) / nk;
  }
  return out;
}

double ladder_a(int lambda, int n) {
  if (std::abs(lambda) > n || ((n - lambda) % 2) != 0) return 0.0;
  const double s = double(n + 1) * double(n + 1) - double(lambda - 1) * double(lambda - 1);
  return std::sqrt(s) / 2.0;
}

RepSum::RepSum(std::vector<int> m_blocks) : m_(std::move(m_blocks)) {
  if (m_.empty()) throw InvalidRepresentation("RepSum: no blocks");
  offset_.reserve(m_.size());
  for (int m : m_) {
    if (m < 1) throw InvalidRepresentation("RepSum: block size must be positive");
    offset_.push_back(total_);
    total_ += m;
  }
}

RepSum RepSum::from_degrees(const std::vector<int>& degrees) {
  std::vector<int> ms;
  ms.reserve(degrees.size());
  for (int n : degrees) {
    if (n < 1 || n % 2 == 0)
      throw InvalidRepresentation("RepSum: quaternionic blocks require odd degree n_alpha");
    ms.push_back((n + 1) / 2);
  }
  return RepSum(std::move(ms));
}

std::vector<int> RepSum::positive_weights(int alpha) const {
  std::vector<int> w;
  const int n = degree(alpha);
  for (int k = 0; k < m_[alpha]; ++k) w.push_back(n - 2 * k);
  return w;
}

bool RepSum::contains_weight(int alpha, int lambda) const {
  const int n = degree(alpha);
  return lambda >= 1 && lambda <= n && (n - lambda) % 2 == 0;
}

int RepSum::slot(int alpha, int lambda) const {
  if (alpha < 0 || alpha >= block_count()) throw WeightError("RepSum::slot: bad block index");
  if (!contains_weight(alpha, lambda))
    throw WeightError("RepSum::slot: weight outside the block's positive weight set");
  return offset_[alpha] + (degree(alpha) - lambda) / 2;
}

namespace {

// Change of basis from the v basis to the packed u basis of one block:
// u_{lambda_k} = v_k (k = 0..m-1), u_{-lambda_k} = (-1)^k i v_{n-k}.
// Rows of C are the u vectors in v coordinates; C is unitary.
Eigen::MatrixXcd u_basis_rows(int m) {
  const int n = 2 * m - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2 * m, n + 1);
  for (int k = 0; k < m; ++k) {
    c(k, k) = 1.0;
    c(m + k, n - k) = (k % 2 == 0) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
  }
  return c;
}

// Transport a column-convention v-basis operator to the row convention on the
// packed u basis of one block: row coords s satisfy coords_v = s * C, so
// M_row_u = C * M_v^T * C^{-1} with C unitary (C^{-1} = C*).
Eigen::MatrixXcd to_packed_row(const Eigen::MatrixXcd& col_v, int m) {
  const Eigen::MatrixXcd c = u_basis_rows(m);
  return c * col_v.transpose() * c.adjoint();
}

// Scatter per-block 2m x 2m packed matrices into the full 2M x 2M layout
// (u-slots of every block first, then all j.u-slots).
Eigen::MatrixXcd assemble(const RepSum& rep,
                          const std::vector<Eigen::MatrixXcd>& block_ops) {
  const int M = rep.total_m();
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(2 * M, 2 * M);
  for (int alpha = 0; alpha < rep.block_count(); ++alpha) {
    const int m = rep.block(alpha);
    const int off = rep.block_offset(alpha);
    const Eigen::MatrixXcd& op = block_ops[alpha];
    full.block(off, off, m, m) = op.topLeftCorner(m, m);
    full.block(off, M + off, m, m) = op.topRightCorner(m, m);
    full.block(M + off, off, m, m) = op.bottomLeftCorner(m, m);
    full.block(M + off, M + off, m, m) = op.bottomRightCorner(m, m);
  }
  return full;
}

}  // namespace

LadderOps ladder_ops(const RepSum& rep) {
  const Complex I(0.0, 1.0);
  std::map<int, std::array<Eigen::MatrixXcd, 3>> cache;
  std::vector<Eigen::MatrixXcd> hs, as, bs;
  for (int alpha = 0; alpha < rep.block_count(); ++alpha) {
    const int m = rep.block(alpha);
    auto it = cache.find(m);
    if (it == cache.end()) {
      const int n = 2 * m - 1;
      const Eigen::MatrixXcd d1 = drho_generator(AlgebraElement::e1(), n);
      const Eigen::MatrixXcd d2 = drho_generator(AlgebraElement::e2(), n);
      const Eigen::MatrixXcd d3 = drho_generator(AlgebraElement::e3(), n);
      std::array<Eigen::MatrixXcd, 3> ops = {
          to_packed_row(-I * d1, m),
          to_packed_row((d2 - I * d3) / 2.0, m),
          to_packed_row(-(d2 + I * d3) / 2.0, m),
      };
      it = cache.emplace(m, std::move(ops)).first;
    }
    hs.push_back(it->second[0]);
    as.push_back(it->second[1]);
    bs.push_back(it->second[2]);
  }
  LadderOps ops{assemble(rep, hs), assemble(rep, as), assemble(rep, bs), {}};
  for (int alpha = 0; alpha < rep.block_count(); ++alpha) {
    std::vector<double> row;
    for (int lambda : rep.positive_weights(alpha)) row.push_back(ladder_a(lambda, rep.degree(alpha)));
    ops.a_table.push_back(std::move(row));
  }
  return ops;
}

QuatVector weight_vector(const RepSum& rep, int alpha, int lambda) {
  QuatVector v(rep.total_m());
  v.a(rep.slot(alpha, lambda)) = 1.0;
  return v;
}

Eigen::MatrixXcd quaternionic_structure(int m) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = -Eigen::MatrixXcd::Identity(m, m);
  j.bottomLeftCorner(m, m) = Eigen::MatrixXcd::Identity(m, m);
  return j;
}

Eigen::MatrixXcd packed_block_matrix(const GroupElement& g, int m) {
  const Eigen::MatrixXcd c = u_basis_rows(m);
  // Column convention in the u basis: coords' = U coords.
  return c.conjugate() * lambda_matrix(g, 2 * m - 1) * c.transpose();
}

QuatMatrix xi_matrix(const GroupElement& g, int m) {
  // Row-convention packed matrix; its (u,u) and (u,ju) blocks are the complex
  // pair of the quaternionic right-action matrix.
  const Eigen::MatrixXcd row = packed_block_matrix(g, m).transpose();
  return QuatMatrix(row.topLeftCorner(m, m), row.topRightCorner(m, m));
}

Eigen::MatrixXcd packed_rep_matrix(const GroupElement& g, const RepSum& rep) {
  std::map<int, Eigen::MatrixXcd> cache;
  std::vector<Eigen::MatrixXcd> ops;
  for (int alpha = 0; alpha < rep.block_count(); ++alpha) {
    const int m = rep.block(alpha);
    auto it = cache.find(m);
    if (it == cache.end())
      it = cache.emplace(m, packed_block_matrix(g, m).transpose().eval()).first;
    ops.push_back(it->second);
  }
  return assemble(rep, ops);
}

QuatVector apply_packed(const QuatVector& v, const Eigen::MatrixXcd& op) {
  if (2 * v.size() != op.rows()) throw DimensionError("apply_packed: dimension mismatch");
  return QuatVector::from_packed(v.packed() * op);
}

}  // namespace hpsphere
