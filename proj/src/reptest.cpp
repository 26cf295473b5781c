#include "hpsphere/reptest.hpp"

#include <cmath>

#include "hpsphere/irreps.hpp"

namespace hpsphere {

namespace {

double oracle_equivalence_residual(const GroupElement& g, int n) {
  const Eigen::MatrixXcd lam = lambda_matrix(g, n);
  double r = 0.0;
  for (int k = 0; k <= n; ++k) {
    const PolyVector img = substitute_action(g, PolyVector::basis(n, k));
    r = std::max(r, (lam.col(k) - img.coeffs).cwiseAbs().maxCoeff());
  }
  return r;
}

double commutator_residual(const RepSum& rep) {
  const LadderOps ops = ladder_ops(rep);
  const auto comm = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    return (x * y - y * x).eval();
  };
  double r = (comm(ops.H, ops.A) - 2.0 * ops.A).cwiseAbs().maxCoeff();
  r = std::max(r, (comm(ops.H, ops.B) + 2.0 * ops.B).cwiseAbs().maxCoeff());
  return std::max(r, (comm(ops.A, ops.B) - ops.H).cwiseAbs().maxCoeff());
}

double drho_fd_residual(int n, double h = 1e-5) {
  double r = 0.0;
  for (const AlgebraElement& eps :
       {AlgebraElement::e1(), AlgebraElement::e2(), AlgebraElement::e3()}) {
    const Eigen::MatrixXcd fd = (lambda_matrix(exp_map(eps.scaled(h)), n) -
                                 lambda_matrix(exp_map(eps.scaled(-h)), n)) /
                                (2.0 * h);
    r = std::max(r, (drho_generator(eps, n) - fd).cwiseAbs().maxCoeff());
  }
  return r;
}

double boundary_pattern_residual() {
  // m = 1: H = diag(1, -1); A sends u to i ju and kills ju; B sends ju to -i u
  // and kills u.
  const LadderOps ops = ladder_ops(RepSum({1}));
  const Complex I(0.0, 1.0);
  Eigen::Matrix2cd h, a, b;
  h << 1.0, 0.0, 0.0, -1.0;
  a << 0.0, I, 0.0, 0.0;
  b << 0.0, 0.0, -I, 0.0;
  double r = (ops.H - h).cwiseAbs().maxCoeff();
  r = std::max(r, (ops.A - a).cwiseAbs().maxCoeff());
  return std::max(r, (ops.B - b).cwiseAbs().maxCoeff());
}

}  // namespace

std::vector<RepCheck> run_rep_suite(int n_max, std::uint64_t seed, int samples) {
  if (n_max < 1) throw std::invalid_argument("run_rep_suite: n_max must be at least 1");

  RepCheck unitarity{"unitarity", n_max, 0.0, 1e-10, false};
  RepCheck symmetry{"symmetry", n_max, 0.0, 1e-10, false};
  RepCheck oracle{"oracle-equivalence", n_max, 0.0, 1e-12, false};
  RepCheck composition{"composition-order", n_max, 0.0, 1e-10, false};
  RepCheck xi{"xi-symplectic", n_max, 0.0, 1e-10, false};
  RepCheck jrel{"j-relation", n_max, 0.0, 1e-10, false};
  RepCheck comms{"ladder-commutators", n_max, 0.0, 1e-12, false};
  RepCheck drho{"drho-fd", n_max, 0.0, 1e-6, false};
  RepCheck boundary{"m1-boundary-pattern", n_max, 0.0, 1e-12, false};

  HaarSampler sampler(seed);
  for (int s = 0; s < samples; ++s) {
    const GroupElement g = sampler.sample();
    const GroupElement g2 = sampler.sample();
    for (int n = 1; n <= n_max; ++n) {
      const Eigen::MatrixXcd lam = lambda_matrix(g, n);
      unitarity.max_residual = std::max(
          unitarity.max_residual,
          (lam * lam.adjoint() - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
      symmetry.max_residual = std::max(symmetry.max_residual, lambda_symmetry_residual(lam));
      oracle.max_residual = std::max(oracle.max_residual, oracle_equivalence_residual(g, n));
      composition.max_residual =
          std::max(composition.max_residual,
                   (lambda_matrix(g * g2, n) - lambda_matrix(g2, n) * lam).cwiseAbs().maxCoeff());
      if (n % 2 == 1) {
        const int m = (n + 1) / 2;
        xi.max_residual = std::max(xi.max_residual, symplectic_residual(xi_matrix(g, m)));
        const Eigen::MatrixXcd u = packed_block_matrix(g, m);
        const Eigen::MatrixXcd j = quaternionic_structure(m);
        jrel.max_residual =
            std::max(jrel.max_residual, (j * u - u.conjugate() * j).cwiseAbs().maxCoeff());
      }
    }
  }

  for (int m1 = 1; m1 <= 5; ++m1) {
    comms.max_residual = std::max(comms.max_residual, commutator_residual(RepSum({m1})));
    for (int m2 = m1; m2 <= 5; ++m2) {
      comms.max_residual = std::max(comms.max_residual, commutator_residual(RepSum({m1, m2})));
      for (int m3 = m2; m3 <= 5; ++m3)
        comms.max_residual =
            std::max(comms.max_residual, commutator_residual(RepSum({m1, m2, m3})));
    }
  }

  for (int n = 1; n <= n_max; ++n)
    drho.max_residual = std::max(drho.max_residual, drho_fd_residual(n));

  boundary.max_residual = boundary_pattern_residual();

  std::vector<RepCheck> checks{unitarity, symmetry,  oracle, composition, xi,
                               jrel,      comms,     drho,   boundary};
  for (RepCheck& c : checks) c.pass = c.max_residual < c.tolerance;
  return checks;
}

}  // namespace hpsphere
