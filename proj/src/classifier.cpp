#include "hpsphere/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace hpsphere {

namespace {

constexpr double kMinimalityTol = 1e-10;
constexpr double kConformalityTol = 1e-8;
constexpr double kCurvatureRelTol = 1e-3;
constexpr double kSpreadTol = 1e-3;
constexpr double kEllTol = 1e-10;
constexpr double kSweepMinimalTol = 1e-6;
constexpr double kSampleRadius = 0.8;

}  // namespace

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kFLambda: return "f-lambda";
    case FamilyKind::kFOne: return "f-one";
    case FamilyKind::kFLambdaMT: return "f-lambda-m-t";
    case FamilyKind::kFEvenPair: return "f-even-pair";
    case FamilyKind::kFOddPair: return "f-odd-pair";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
  for (FamilyKind k : {FamilyKind::kFLambda, FamilyKind::kFOne, FamilyKind::kFLambdaMT,
                       FamilyKind::kFEvenPair, FamilyKind::kFOddPair})
    if (family_kind_name(k) == name) return k;
  return std::nullopt;
}

std::string FamilyDescriptor::params_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::kFLambda: os << "lambda=" << lambda; break;
    case FamilyKind::kFOne: break;
    case FamilyKind::kFLambdaMT: os << "lambda=" << lambda << " m=" << m1 << " t=(0,pi/2)"; break;
    case FamilyKind::kFEvenPair:
    case FamilyKind::kFOddPair: os << "m1=" << m1 << " m2=" << m2; break;
  }
  return os.str();
}

std::string FamilyDescriptor::label() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::kFLambda: os << "f_" << lambda; break;
    case FamilyKind::kFOne: os << "f_1"; break;
    case FamilyKind::kFLambdaMT: os << "f_{" << lambda << "," << m1 << ",t}"; break;
    case FamilyKind::kFEvenPair: os << "f_{" << m1 << "," << m2 << "}"; break;
    case FamilyKind::kFOddPair: os << "f'_{" << m1 << "," << m2 << "}"; break;
  }
  return os.str();
}

FamilyDescriptor make_family(FamilyKind kind, int n, int lambda, int m1, int m2) {
  if (n < 1) throw InvalidFamily("family: ambient dimension n must be at least 1");
  FamilyDescriptor f;
  f.kind = kind;
  f.n = n;
  switch (kind) {
    case FamilyKind::kFLambda:
      if (lambda % 2 == 0 || lambda < 3 || lambda > 2 * n + 1)
        throw InvalidFamily("f-lambda: lambda must be odd with 3 <= lambda <= 2n+1");
      f.lambda = lambda;
      f.curvature = 8.0 / (double(2 * n + 2) * double(2 * n + 2) - double(lambda) * lambda - 1.0);
      break;
    case FamilyKind::kFOne:
      f.lambda = 1;
      f.curvature = 4.0 / (double(n) * double(n + 2));
      break;
    case FamilyKind::kFLambdaMT:
      if (n % 2 == 0) throw InvalidFamily("f-lambda-m-t: requires odd n (2m = n+1)");
      if (m1 == 0) m1 = (n + 1) / 2;
      if (2 * m1 != n + 1) throw InvalidFamily("f-lambda-m-t: requires 2m = n+1");
      if (lambda % 2 == 0 || lambda < 3 || lambda > n)
        throw InvalidFamily("f-lambda-m-t: lambda must be odd with 3 <= lambda <= n");
      f.lambda = lambda;
      f.m1 = f.m2 = m1;
      f.curvature = 8.0 / (double(n + 1) * double(n + 1) - double(lambda) * lambda - 1.0);
      break;
    case FamilyKind::kFEvenPair:
    case FamilyKind::kFOddPair:
      if (m1 < 1 || m2 < m1) throw InvalidFamily("pair family: requires 1 <= m1 <= m2");
      if (m1 + m2 != n + 1) throw InvalidFamily("pair family: requires m1 + m2 = n+1");
      if (kind == FamilyKind::kFEvenPair && (m1 + m2) % 2 != 0)
        throw InvalidFamily("f-even-pair: m1 + m2 must be even");
      if (kind == FamilyKind::kFOddPair && ((m1 + m2) % 2 != 1 || m1 == m2))
        throw InvalidFamily("f-odd-pair: m1 + m2 must be odd with m1 < m2");
      f.lambda = 1;
      f.m1 = m1;
      f.m2 = m2;
      f.curvature = 4.0 / (double(m1) * m1 + double(m2) * m2 - 1.0);
      break;
  }
  return f;
}

std::vector<FamilyDescriptor> enumerate_families(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_families: n must be at least 1");
  std::vector<FamilyDescriptor> out;
  for (int lambda = 3; lambda <= 2 * n + 1; lambda += 2)
    out.push_back(make_family(FamilyKind::kFLambda, n, lambda));
  out.push_back(make_family(FamilyKind::kFOne, n));
  if (n % 2 == 1)
    for (int lambda = 3; lambda <= n; lambda += 2)
      out.push_back(make_family(FamilyKind::kFLambdaMT, n, lambda));
  for (int m1 = 1; 2 * m1 <= n + 1; ++m1) {
    const int m2 = n + 1 - m1;
    if ((n + 1) % 2 == 0)
      out.push_back(make_family(FamilyKind::kFEvenPair, n, 0, m1, m2));
    else if (m1 < m2)
      out.push_back(make_family(FamilyKind::kFOddPair, n, 0, m1, m2));
  }
  return out;
}

BasePoint base_point_for(const FamilyDescriptor& family, std::optional<double> t) {
  const Complex I(0.0, 1.0);
  if (family.kind == FamilyKind::kFLambdaMT) {
    if (!t) throw InvalidFamily("base_point_for: f-lambda-m-t requires the parameter t");
    if (!(*t > 0.0 && *t < std::numbers::pi / 2.0))
      throw InvalidFamily("base_point_for: t must lie in (0, pi/2)");
  } else if (t) {
    throw InvalidFamily("base_point_for: t is only meaningful for f-lambda-m-t");
  }
  switch (family.kind) {
    case FamilyKind::kFLambda:
    case FamilyKind::kFOne:
      return BasePoint(RepSum({family.n + 1}), family.lambda, {Complex(1.0, 0.0)});
    case FamilyKind::kFLambdaMT:
      return BasePoint(RepSum({family.m1, family.m1}), family.lambda,
                       {Complex(std::cos(*t), 0.0), I * std::sin(*t)});
    case FamilyKind::kFEvenPair: {
      const double s = double(family.m1 + family.m2);
      return BasePoint(RepSum({family.m1, family.m2}), 1,
                       {Complex(std::sqrt(family.m1 / s), 0.0), I * std::sqrt(family.m2 / s)});
    }
    case FamilyKind::kFOddPair: {
      const double s = double(family.m1 + family.m2);
      return BasePoint(RepSum({family.m1, family.m2}), 1,
                       {Complex(std::sqrt(family.m1 / s), 0.0),
                        Complex(std::sqrt(family.m2 / s), 0.0)});
    }
  }
  throw InvalidFamily("base_point_for: unknown family kind");
}

double expected_ell_prime(const FamilyDescriptor& family) {
  const auto sign = [](int m) { return (m % 2 == 0) ? -1.0 : 1.0; };  // (-1)^{m+1}
  switch (family.kind) {
    case FamilyKind::kFOddPair:
      return sign(family.m1) * family.m1 + sign(family.m2) * family.m2;
    case FamilyKind::kFEvenPair:
      return sign(family.m1) * family.m1 - sign(family.m2) * family.m2;
    case FamilyKind::kFOne:
      return sign(family.n + 1) * (family.n + 1);
    default:
      return 0.0;  // lambda > 1: ell vanishes identically
  }
}

namespace {

std::vector<Complex> sample_chart_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-kSampleRadius, kSampleRadius);
  std::vector<Complex> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    const Complex w(uni(rng), uni(rng));
    if (std::abs(w) <= kSampleRadius) pts.push_back(w);
  }
  return pts;
}

VerificationReport run_checks(const std::vector<BasePoint>& orbits,
                              const VerifyOptions& options, const std::string& kind,
                              const std::string& params, const FamilyDescriptor* family) {
  VerificationReport out;
  out.kind = kind;
  out.params = params;
  auto fail = [&out](const std::string& name) {
    out.pass = false;
    if (std::find(out.failures.begin(), out.failures.end(), name) == out.failures.end())
      out.failures.push_back(name);
  };

  const std::vector<Complex> points = sample_chart_points(options.samples, options.seed);
  double conf_max = 0.0;
  double k_sum = 0.0, k_min = 0.0, k_max = 0.0, k_sq = 0.0;
  long k_count = 0;
  for (const BasePoint& z : orbits) {
    out.report.minimality_residual =
        std::max(out.report.minimality_residual, minimality_residual(z));

    const TangentData tangent = tangent_data(z);
    const double xy2 = tangent.X.norm2() + tangent.Y.norm2();
    if (xy2 < 1e-12) {
      fail("degenerate-orbit");
      return out;
    }
    out.report.K_closed = 4.0 / xy2;

    if (family != nullptr) {
      if (family->lambda > 1) {
        // Weight orthogonality makes ell vanish without roundoff.
        if (tangent.ell.norm2() != 0.0) fail("ell-zero");
      } else {
        const double lp = tangent.ell.b.imag();
        if (std::abs(tangent.ell.a) + std::abs(tangent.ell.b.real()) > kEllTol ||
            std::abs(lp - expected_ell_prime(*family)) > kEllTol)
          fail("ell-prime");
      }
      if (std::abs(out.report.K_closed - family->curvature) > 1e-12 * family->curvature)
        fail("closed-form-curvature");
    }

    for (const Complex& w : points) {
      const MetricSample ms = numeric_metric(z, w, options.metric_step);
      conf_max = std::max(conf_max, ms.conformality_residual());
      const double k = numeric_curvature(z, w, options.curvature_step);
      k_sum += k;
      k_sq += k * k;
      k_min = k_count == 0 ? k : std::min(k_min, k);
      k_max = k_count == 0 ? k : std::max(k_max, k);
      ++k_count;
    }
  }
  if (!(out.report.minimality_residual < kMinimalityTol)) fail("minimality");

  const double mean = k_sum / k_count;
  out.report.K_numeric_mean = mean;
  out.report.K_numeric_std = std::sqrt(std::max(0.0, k_sq / k_count - mean * mean));
  out.report.K_numeric_spread = k_max - k_min;
  out.report.conformality_residual = conf_max;

  if (conf_max > kConformalityTol) fail("conformality");
  if (!(std::abs(mean - out.report.K_closed) < kCurvatureRelTol * out.report.K_closed))
    fail("curvature-accuracy");
  if (!(std::max(std::abs(k_max - out.report.K_closed), std::abs(k_min - out.report.K_closed)) <
        kCurvatureRelTol * out.report.K_closed))
    fail("curvature-pointwise");
  if (!(out.report.K_numeric_spread < kSpreadTol)) fail("curvature-spread");
  return out;
}

}  // namespace

VerificationReport verify_family(const FamilyDescriptor& family, const VerifyOptions& options) {
  std::vector<BasePoint> orbits;
  std::string params = family.params_string();
  if (family.kind == FamilyKind::kFLambdaMT) {
    // The continuum is sampled on a fixed grid unless a t was requested; the
    // closed-form curvature does not depend on t.
    std::vector<double> ts;
    if (options.t)
      ts.push_back(*options.t);
    else
      ts = {0.2, 0.5, 0.8, 1.1, 1.4};
    for (double t : ts) orbits.push_back(base_point_for(family, t));
    if (options.t) params += " t=" + std::to_string(*options.t);
  } else {
    orbits.push_back(base_point_for(family));
  }
  VerificationReport report =
      run_checks(orbits, options, family_kind_name(family.kind), params, &family);
  report.family = family;
  return report;
}

VerificationReport verify_base_point(const BasePoint& z, const VerifyOptions& options,
                                     const std::string& kind, const std::string& params) {
  return run_checks({z}, options, kind, params, nullptr);
}

namespace {

void partitions_into_at_most_three(int total, std::vector<std::vector<int>>& out) {
  for (int m1 = 1; m1 <= total; ++m1) {
    if (m1 == total) out.push_back({m1});
    for (int m2 = m1; m1 + m2 <= total; ++m2) {
      if (m1 + m2 == total) out.push_back({m1, m2});
      const int m3 = total - m1 - m2;
      if (m3 >= m2) out.push_back({m1, m2, m3});
    }
  }
}

}  // namespace

SweepResult completeness_sweep(int n_max) {
  if (n_max < 1) throw std::invalid_argument("completeness_sweep: n_max must be at least 1");
  SweepResult result;

  // Nine moduli times phases {1, i}; the sqrt(k) moduli hit the exact pair
  // family coefficients sqrt(m / (m1 + m2)) after normalization.
  std::vector<Complex> grid;
  for (int k = 1; k <= 9; ++k) {
    grid.push_back(Complex(std::sqrt(double(k)), 0.0));
    grid.push_back(Complex(0.0, std::sqrt(double(k))));
  }

  for (int n = 1; n <= n_max; ++n) {
    // Families of every ambient dimension up to n; reductions of non-full
    // configurations land in smaller HP^{n'}.
    std::vector<FamilyDescriptor> catalog;
    for (int np = 1; np <= n; ++np) {
      auto fams = enumerate_families(np);
      catalog.insert(catalog.end(), fams.begin(), fams.end());
    }
    const auto matches = [&catalog](FamilyKind kind, double curvature) {
      return std::any_of(catalog.begin(), catalog.end(), [&](const FamilyDescriptor& f) {
        return f.kind == kind && std::abs(f.curvature - curvature) < 1e-6;
      });
    };

    std::vector<std::vector<int>> parts;
    partitions_into_at_most_three(n + 1, parts);
    for (const std::vector<int>& part : parts) {
      const RepSum rep(part);
      const LadderOps ops = ladder_ops(rep);
      const int blocks = static_cast<int>(part.size());
      const int lambda_max = 2 * *std::min_element(part.begin(), part.end()) - 1;
      for (int lambda = 1; lambda <= lambda_max; lambda += 2) {
        // First block's phase is fixed to 1: left unit-complex scaling is gauge.
        std::vector<int> idx(blocks, 0);
        const auto option_count = [&](int alpha) {
          return alpha == 0 ? 9 : static_cast<int>(grid.size());
        };
        const auto coefficient = [&](int alpha) {
          return alpha == 0 ? grid[2 * idx[0]] : grid[idx[alpha]];
        };
        bool done = false;
        while (!done) {
          ++result.configurations;
          QuatVector z(rep.total_m());
          Complex sum_sq(0.0, 0.0);
          for (int alpha = 0; alpha < blocks; ++alpha) {
            const Complex c = coefficient(alpha);
            z.a(rep.slot(alpha, lambda)) = c;
            sum_sq += c * c;
          }
          const double inv = 1.0 / z.norm();
          z.a *= inv;
          sum_sq *= inv * inv;

          const double residual = detail::minimality_residual(z, ops);
          if (residual < kSweepMinimalTol) {
            const detail::TangentSums sums = detail::tangent_sums(z, ops);
            if (sums.xy_norm2 < 1e-9) {
              ++result.degenerate;
            } else {
              ++result.minimal_found;
              const double curvature = 4.0 / sums.xy_norm2;
              const std::set<int> distinct(part.begin(), part.end());
              std::optional<FamilyKind> expect;
              if (lambda > 1) {
                if (distinct.size() == 1)
                  expect = std::abs(sum_sq) > 1.0 - 1e-9 ? FamilyKind::kFLambda
                                                         : FamilyKind::kFLambdaMT;
                // distinct block sizes with lambda > 1: no family can match
              } else if (distinct.size() == 1) {
                if (std::abs(sum_sq) > 1.0 - 1e-9)
                  expect = FamilyKind::kFOne;
                else if (std::abs(sum_sq) < 1e-9)
                  expect = FamilyKind::kFEvenPair;
              } else if (distinct.size() == 2) {
                const int s = *distinct.begin() + *distinct.rbegin();
                expect = (s % 2 == 0) ? FamilyKind::kFEvenPair : FamilyKind::kFOddPair;
              }
              if (!expect || !matches(*expect, curvature)) {
                std::ostringstream os;
                os << "n=" << n << " blocks=[";
                for (size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i];
                os << "] lambda=" << lambda << " residual=" << residual << " K=" << curvature;
                result.unmatched.push_back(os.str());
              }
            }
          }

          int alpha = blocks - 1;
          while (alpha >= 0 && ++idx[alpha] == option_count(alpha)) idx[alpha--] = 0;
          done = alpha < 0;
        }
      }
    }
  }
  return result;
}

}  // namespace hpsphere
