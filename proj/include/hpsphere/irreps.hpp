#ifndef HPSPHERE_IRREPS_HPP
#define HPSPHERE_IRREPS_HPP

#include <vector>

#include <Eigen/Dense>

#include "hpsphere/errors.hpp"
#include "hpsphere/quaternion.hpp"
#include "hpsphere/su2.hpp"

namespace hpsphere {

// ---------------------------------------------------------------------------
// Conventions, fixed once for the whole build.
//
// V_n carries the orthonormal basis v_{k,n} = z0^k z1^{n-k} / sqrt(k!(n-k)!),
// k = 0..n, and the action (rho_n(g) f)(z0, z1) = f((z0, z1) g^{-1}).  The
// weight of v_{k,n} is lambda_k = n - 2k; v_{0,n} carries the highest weight.
//
// lambda_matrix is column-convention: v_k . rho(g) = sum_l Lambda_{lk} v_l.
// Under that convention the composition order is reversed,
//     Lambda(g1 g2) = Lambda(g2) Lambda(g1),
// detected empirically (detect_composition_order) and frozen here.  All packed
// operators below use the transposed row convention, under which the matrices
// compose forward: row_coords(v . rho(g1 g2)) = row . M(g1) . M(g2), and
// operator products satisfy v.(XY) = (v.X).Y as plain matrix products.
// ---------------------------------------------------------------------------

enum class CompositionOrder { kForward, kReversed };

/// Column-convention composition order of lambda_matrix, frozen from the probe.
inline constexpr CompositionOrder kLambdaComposition = CompositionOrder::kReversed;

/// Empirical probe: which of Lambda(g1 g2) = Lambda(g1)Lambda(g2) (kForward) or
/// Lambda(g2)Lambda(g1) (kReversed) holds.  Used by tests to pin the constant.
CompositionOrder detect_composition_order(int n, std::uint64_t seed);

/// Degree-n homogeneous polynomial over the orthonormal basis v_{k,n}.
struct PolyVector {
  int degree = 0;
  Eigen::VectorXcd coeffs;  // length degree+1, entry k multiplies v_{k,n}

  PolyVector() = default;
  PolyVector(int n, Eigen::VectorXcd c) : degree(n), coeffs(std::move(c)) {}

  /// Basis polynomial v_{k,n}.
  static PolyVector basis(int n, int k);
  /// Monomial z0^k z1^{n-k} (unnormalized).
  static PolyVector monomial(int n, int k);
};

/// Exact expansion of p((z0,z1) g^{-1}) by binomial convolution.  This is the
/// defining action and serves as the independent oracle for lambda_matrix.
PolyVector substitute_action(const GroupElement& g, const PolyVector& p);

/// Matrix coefficients Lambda_{lk}(g) of rho_n via the closed product-sum
/// formula (column convention; columns are images of basis vectors).
Eigen::MatrixXcd lambda_matrix(const GroupElement& g, int n);

/// Residual of the self-conjugacy symmetry
///   Lambda_{lk} = (-1)^{k+l} conj(Lambda_{n-l, n-k}).
double lambda_symmetry_residual(const Eigen::MatrixXcd& lambda);

/// d rho_n(eps) by first-order expansion of the substitution (column
/// convention, matching finite differences of lambda_matrix(exp(t eps))).
Eigen::MatrixXcd drho_generator(const AlgebraElement& eps, int n);

/// a_{lambda,n} = sqrt((n+1)^2 - (lambda-1)^2)/2 on the weight set, else 0.
double ladder_a(int lambda, int n);

/// Direct sum of quaternionic irreps rho_{m_alpha}; n_alpha = 2 m_alpha - 1.
/// Packed basis: all u-slots block by block (weights n_alpha, n_alpha-2, .., 1),
/// then all j.u-slots block by block.
class RepSum {
 public:
  explicit RepSum(std::vector<int> m_blocks);
  /// Build from complex degrees n_alpha; throws InvalidRepresentation unless all odd.
  static RepSum from_degrees(const std::vector<int>& degrees);

  int block_count() const { return static_cast<int>(m_.size()); }
  int block(int alpha) const { return m_[alpha]; }
  int degree(int alpha) const { return 2 * m_[alpha] - 1; }
  const std::vector<int>& blocks() const { return m_; }

  /// Total quaternionic dimension M = sum m_alpha.
  int total_m() const { return total_; }

  /// Positive weights of block alpha, descending: n_alpha, n_alpha-2, ..., 1.
  std::vector<int> positive_weights(int alpha) const;
  bool contains_weight(int alpha, int lambda) const;

  /// Packed u-slot index of weight lambda in block alpha; the matching j.u-slot
  /// is total_m() + slot.  Throws WeightError when lambda is not a positive
  /// weight of the block.
  int slot(int alpha, int lambda) const;

  int block_offset(int alpha) const { return offset_[alpha]; }

 private:
  std::vector<int> m_;
  std::vector<int> offset_;
  int total_ = 0;
};

/// Ladder operators on the packed basis, row convention (2M x 2M).
struct LadderOps {
  Eigen::MatrixXcd H;
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
  /// a_table[alpha][k] = a_{lambda_k, n_alpha} over the positive weights
  /// (descending), so a_table[alpha].back() = a_{1, n_alpha} = m_alpha.
  std::vector<std::vector<double>> a_table;
};

/// H = -i drho(e1), A = (drho(e2) - i drho(e3))/2, B = -(drho(e2) + i drho(e3))/2,
/// transported to the packed quaternionic basis.
LadderOps ladder_ops(const RepSum& rep);

/// Unit QuatVector on the packed slot (block alpha, weight lambda).
QuatVector weight_vector(const RepSum& rep, int alpha, int lambda);

/// The block matrix J = [[0, -I_m], [I_m, 0]] of the quaternionic structure.
Eigen::MatrixXcd quaternionic_structure(int m);

/// Matrix of rho_n (n = 2m-1) over the packed u-basis, column convention
/// (the form in which J rho(g) = conj(rho(g)) J holds).
Eigen::MatrixXcd packed_block_matrix(const GroupElement& g, int m);

/// Quaternionic m x m matrix of rho_m(g), acting on row vectors on the right;
/// lands in Sp(m) and satisfies Xi(g1 g2) = Xi(g1) Xi(g2).
QuatMatrix xi_matrix(const GroupElement& g, int m);

/// Block-diagonal row-convention matrix of rho(g) on the packed basis (2M x 2M).
Eigen::MatrixXcd packed_rep_matrix(const GroupElement& g, const RepSum& rep);

/// Apply a row-convention packed operator to a quaternionic vector.
QuatVector apply_packed(const QuatVector& v, const Eigen::MatrixXcd& op);

}  // namespace hpsphere

#endif  // HPSPHERE_IRREPS_HPP
