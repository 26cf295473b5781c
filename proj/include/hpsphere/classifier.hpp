#ifndef HPSPHERE_CLASSIFIER_HPP
#define HPSPHERE_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpsphere/orbit.hpp"

namespace hpsphere {

enum class FamilyKind { kFLambda, kFOne, kFLambdaMT, kFEvenPair, kFOddPair };

std::string family_kind_name(FamilyKind kind);                   // "f-lambda", ...
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

/// One entry of the minimal homogeneous two-sphere classification in HP^n.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::kFOne;
  int n = 1;       // ambient quaternionic projective dimension
  int lambda = 0;  // F_LAMBDA, F_LAMBDA_M_T
  int m1 = 0;      // pair families; F_LAMBDA_M_T stores m1 = m2 = m
  int m2 = 0;
  double curvature = 0.0;  // closed-form Gauss curvature

  std::string params_string() const;  // "lambda=3", "m1=1 m2=2", ...
  std::string label() const;          // "f_3", "f'_{1,2}", "f_{3,2,t}", ...
};

/// Validates ranges/parities and fills in the closed-form curvature.
/// Throws InvalidFamily on any parameter or parity mismatch.
FamilyDescriptor make_family(FamilyKind kind, int n, int lambda = 0, int m1 = 0, int m2 = 0);

/// The complete duplicate-free list for HP^n; t-families appear once with a
/// symbolic parameter.  Throws std::invalid_argument for n < 1.
std::vector<FamilyDescriptor> enumerate_families(int n);

/// Normal-form base point realizing the family.  t is required for
/// F_LAMBDA_M_T (in (0, pi/2)) and must be absent otherwise.
BasePoint base_point_for(const FamilyDescriptor& family, std::optional<double> t = std::nullopt);

/// Expected gauge-fixed ell' of the pair families' base points; single-block
/// and t-family base points have ell = 0 (exactly) for lambda > 1.
double expected_ell_prime(const FamilyDescriptor& family);

struct VerifyOptions {
  int samples = 20;
  double curvature_step = 1e-2;
  double metric_step = 1e-5;
  std::uint64_t seed = 1;
  std::optional<double> t;  // t-family parameter; default used when absent
};

struct VerificationReport {
  std::string kind;    // family flag name, or "custom" for spec-file orbits
  std::string params;
  std::optional<FamilyDescriptor> family;  // absent for spec-file orbits
  CurvatureReport report;
  bool pass = true;
  std::vector<std::string> failures;  // named failed checks
};

/// Full pipeline: minimality, conformality, numeric-vs-closed-form curvature
/// at `samples` chart points, and the family's ell' reconciliation.
VerificationReport verify_family(const FamilyDescriptor& family, const VerifyOptions& options);

/// Same pipeline for an arbitrary base point (no family-specific checks);
/// minimality is still required for `pass`.
VerificationReport verify_base_point(const BasePoint& z, const VerifyOptions& options,
                                     const std::string& kind = "custom",
                                     const std::string& params = "");

/// Brute-force search over base points: block partitions of n+1 into at most
/// three parts, all admissible weights, per-block coefficient grid of nine
/// moduli {sqrt(1)..sqrt(9)} times phases {1, i}.  Every configuration with
/// minimality residual below 1e-6 must match an enumerated family signature
/// (kind and curvature) for some ambient dimension n' <= n.
struct SweepResult {
  long configurations = 0;
  long minimal_found = 0;
  long degenerate = 0;
  std::vector<std::string> unmatched;  // descriptions of violations (empty on success)
};

SweepResult completeness_sweep(int n_max);

}  // namespace hpsphere

#endif  // HPSPHERE_CLASSIFIER_HPP
