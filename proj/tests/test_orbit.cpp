#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "hpsphere/classifier.hpp"
#include "hpsphere/orbit.hpp"

using namespace hpsphere;

namespace {

const Complex I(0.0, 1.0);

BasePoint odd_pair_12() {
  return BasePoint(RepSum({1, 2}), 1, {std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
}

BasePoint mixed_23_control() {
  return BasePoint(RepSum({2, 3}), 3, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
}

}  // namespace

TEST_CASE("BasePoint validation") {
  CHECK_THROWS_AS(BasePoint(RepSum({2}), 2, {1.0}), WeightError);       // even weight
  CHECK_THROWS_AS(BasePoint(RepSum({2}), 5, {1.0}), WeightError);       // outside the block
  CHECK_THROWS_AS(BasePoint(RepSum({2, 2}), 3, {1.0}), DimensionError); // one c per block
  CHECK_THROWS_AS(BasePoint(RepSum({2, 2}), 3, {1.0, 0.0}), WeightError);
  // c = 0 is fine exactly on blocks that do not carry the weight
  const BasePoint ok(RepSum({1, 2}), 3, {0.0, 1.0});
  CHECK(ok.vector().norm() == doctest::Approx(1.0).epsilon(1e-14));
  // normalization happens on construction
  const BasePoint scaled(RepSum({2}), 3, {5.0});
  CHECK(scaled.vector().norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tangent_data on the frozen examples") {
  // single block [2], lambda = 3: ell = 0, |X|^2 = 3, |Y|^2 = 0
  const TangentData t1 = tangent_data(BasePoint(RepSum({2}), 3, {1.0}));
  CHECK(t1.ell.norm2() == 0.0);
  CHECK(t1.X.norm2() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(t1.Y.norm2() == doctest::Approx(0.0).epsilon(1e-13));

  // [1], lambda = 1: ell = (1 i) j
  const TangentData t2 = tangent_data(BasePoint(RepSum({1}), 1, {1.0}));
  CHECK(std::abs(t2.ell.a) < 1e-14);
  CHECK(std::abs(t2.ell.b - I) < 1e-14);

  // [m, m], lambda = 1, c = (1, i)/sqrt(2): ell = 0
  for (int m : {1, 2, 3}) {
    const BasePoint z(RepSum({m, m}), 1, {1.0 / std::sqrt(2.0), I / std::sqrt(2.0)});
    CHECK(tangent_data(z).ell.norm() < 1e-14);
  }
}

TEST_CASE("closed_form_curvature known values") {
  CHECK(closed_form_curvature(BasePoint(RepSum({3}), 1, {1.0})) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(closed_form_curvature(BasePoint(RepSum({2}), 3, {1.0})) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(closed_form_curvature(odd_pair_12()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(closed_form_curvature(BasePoint(RepSum({1, 3}), 1, {0.5, I * std::sqrt(3.0) / 2.0})) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-12));

  // [1] with lambda = 1 is a fixed point of the action: degenerate orbit
  CHECK_THROWS_AS(closed_form_curvature(BasePoint(RepSum({1}), 1, {1.0})), DegenerateOrbit);
}

TEST_CASE("minimality_residual on families and the mixed control") {
  for (int n = 1; n <= 6; ++n)
    for (const FamilyDescriptor& family : enumerate_families(n)) {
      std::optional<double> t;
      if (family.kind == FamilyKind::kFLambdaMT) t = 0.9;
      CHECK(minimality_residual(base_point_for(family, t)) < 1e-10);
    }

  CHECK(minimality_residual(mixed_23_control()) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(minimality_residual(odd_pair_12()) < 1e-10);
}

TEST_CASE("Case I obstruction: residual equals the coefficient spread") {
  // blocks with unequal m and a single lambda > 1: p_candidate is the weighted
  // mean of a^2_{lambda,alpha} and the residual is the norm of the spread.
  const double c1 = std::sqrt(0.3), c2 = std::sqrt(0.7);
  const BasePoint z(RepSum({2, 3}), 3, {c1, c2});
  const double a1 = ladder_a(3, 3) * ladder_a(3, 3);
  const double a2 = ladder_a(3, 5) * ladder_a(3, 5);
  const double p = a1 * c1 * c1 + a2 * c2 * c2;
  const TangentData t = tangent_data(z);
  CHECK(std::abs(t.p_candidate.a - p) < 1e-12);
  CHECK(std::abs(t.p_candidate.b) < 1e-14);
  const double expected =
      std::sqrt((a1 - p) * (a1 - p) * c1 * c1 + (a2 - p) * (a2 - p) * c2 * c2);
  CHECK(minimality_residual(z) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(a1 - t.p_candidate.a) > 1e-2);
  CHECK(std::abs(a2 - t.p_candidate.a) > 1e-2);
}

TEST_CASE("gauge covariance of the verdict") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const BasePoint z = odd_pair_12();
  const double r0 = minimality_residual(z);
  const double k0 = closed_form_curvature(z);

  for (int trial = 0; trial < 20; ++trial) {
    Quaternion q(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
    const double inv = 1.0 / q.norm();
    q = inv * q;
    const QuatVector rotated = q * z.vector();
    const BasePoint back = renormalize_gauge(z.rep(), z.weight(), rotated);
    CHECK(std::abs(minimality_residual(back) - r0) < 1e-10);
    CHECK(closed_form_curvature(back) == doctest::Approx(k0).epsilon(1e-10));
  }

  // a control point stays non-minimal in every gauge
  const BasePoint c = mixed_23_control();
  Quaternion q(Complex(0.3, -0.4), Complex(0.5, 0.2));
  q = (1.0 / q.norm()) * q;
  const BasePoint cback = renormalize_gauge(c.rep(), c.weight(), q * c.vector());
  CHECK(std::abs(minimality_residual(cback) - 2.5) < 1e-10);
}

TEST_CASE("immerse at the origin and isometry") {
  const BasePoint z = odd_pair_12();
  const QuatVector at0 = immerse(z, 0.0);
  CHECK((at0 - z.vector()).norm() < 1e-14);

  for (const Complex w : {Complex(0.7, 0.1), Complex(-1.3, 2.4), Complex(0.0, -0.6)})
    CHECK(std::abs(immerse(z, w).norm2() - 1.0) < 1e-12);

  // m = 1 block: the image coordinates follow the hand-computed Xi
  const BasePoint e(RepSum({1}), 1, {1.0});
  const Complex w(1.0, 0.0);
  const GroupElement s = chart_section(w);
  const QuatVector img = immerse(e, w);
  CHECK(std::abs(img.a(0) - s.a) < 1e-14);
  CHECK(std::abs(img.b(0) - I * s.b) < 1e-14);
}

TEST_CASE("numeric_metric conformality and conformal factor") {
  const Complex w(0.3, 0.2);
  for (int n : {1, 2, 3}) {
    for (const FamilyDescriptor& family : enumerate_families(n)) {
      std::optional<double> t;
      if (family.kind == FamilyKind::kFLambdaMT) t = 0.55;
      const BasePoint z = base_point_for(family, t);
      const MetricSample ms = numeric_metric(z, w, 1e-5);
      CHECK(ms.g_xx > 0.0);
      CHECK(ms.conformal_factor > 0.0);
      CHECK(std::abs(ms.g_xy) / ms.g_xx < 1e-8);
      CHECK(std::abs(ms.g_xx - ms.g_yy) / ms.g_xx < 1e-8);
    }
  }

  // homogeneity pins the conformal factor to the round-chart profile
  const BasePoint f3(RepSum({2}), 3, {1.0});
  const double l0 = numeric_metric(f3, 0.0).conformal_factor;
  const double l1 = numeric_metric(f3, 1.0).conformal_factor;
  const double round_ratio = std::pow(1.0 + 1.0, 2.0) / std::pow(1.0 + 0.0, 2.0);
  CHECK(l0 / l1 == doctest::Approx(round_ratio).epsilon(1e-6));
}

TEST_CASE("numeric_curvature against the closed forms") {
  CHECK(numeric_curvature(BasePoint(RepSum({3}), 1, {1.0}), Complex(0.4, -0.1)) ==
        doctest::Approx(0.5).epsilon(1e-3));
  CHECK(numeric_curvature(BasePoint(RepSum({2}), 3, {1.0}), 0.0) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-3));
  CHECK(numeric_curvature(BasePoint(RepSum({1, 3}), 1, {0.5, I * std::sqrt(3.0) / 2.0}),
                          Complex(0.3, 0.2)) == doctest::Approx(4.0 / 9.0).epsilon(1e-3));
}

TEST_CASE("numeric curvature is constant across chart points") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(-0.8, 0.8);
  for (int n : {2, 3}) {
    for (const FamilyDescriptor& family : enumerate_families(n)) {
      std::optional<double> t;
      if (family.kind == FamilyKind::kFLambdaMT) t = 1.1;
      const BasePoint z = base_point_for(family, t);
      double kmin = 0.0, kmax = 0.0;
      bool first = true;
      for (int i = 0; i < 8; ++i) {
        Complex w(uni(rng), uni(rng));
        if (std::abs(w) > 0.8) w *= 0.8 / std::abs(w);
        const double k = numeric_curvature(z, w);
        kmin = first ? k : std::min(kmin, k);
        kmax = first ? k : std::max(kmax, k);
        first = false;
        CHECK(std::abs(k - family.curvature) < 1e-3 * family.curvature);
      }
      CHECK(kmax - kmin < 1e-3);
    }
  }
}

TEST_CASE("derivative_consistency") {
  const BasePoint z = odd_pair_12();
  CHECK(derivative_consistency(z, 0.0, 1e-5) < 1e-6);
  CHECK(derivative_consistency(z, Complex(0.2, 0.1), 1e-5) < 1e-6);
  CHECK(derivative_consistency(BasePoint(RepSum({2}), 3, {1.0}), Complex(-0.4, 0.3), 1e-5) <
        1e-6);

  // central differences are second order: quadrupling h scales the residual ~16x
  const double r1 = derivative_consistency(z, Complex(0.3, -0.2), 4e-3);
  const double r2 = derivative_consistency(z, Complex(0.3, -0.2), 1e-3);
  CHECK(r1 / r2 > 8.0);
  CHECK(r1 / r2 < 32.0);
}

TEST_CASE("weight vectors flow with i*lambda along the epsilon_1 orbit") {
  const RepSum rep({3});
  const int lambda = 3;
  const BasePoint z(rep, lambda, {1.0});
  const Complex w(0.25, -0.15);
  const GroupElement s = chart_section(w);
  const double h = 1e-6;

  const auto at = [&](double tt) {
    const GroupElement g = exp_map(AlgebraElement::e1().scaled(tt)) * s;
    return apply_packed(z.vector(), packed_rep_matrix(g, rep));
  };
  const QuatVector fd = Quaternion(1.0 / (2.0 * h)) * (at(h) - at(-h));
  const QuatVector expected = Quaternion(I * double(lambda), 0.0) * at(0.0);
  CHECK((fd - expected).norm() < 1e-6);
}

TEST_CASE("numeric_curvature rejects bad steps") {
  const BasePoint z = odd_pair_12();
  CHECK_THROWS_AS(numeric_curvature(z, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(numeric_metric(z, 0.0, 0.0), std::invalid_argument);
}
