#ifndef HPSPHERE_REPTEST_HPP
#define HPSPHERE_REPTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hpsphere {

struct RepCheck {
  std::string name;
  int n_max = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Representation property suite: unitarity, symmetry, oracle equivalence,
/// composition order, Xi in Sp(m), J-relation, ladder commutators, the
/// finite-difference derivation check, and the m = 1 boundary pattern, for all
/// degrees n <= n_max over `samples` Haar elements.
std::vector<RepCheck> run_rep_suite(int n_max, std::uint64_t seed, int samples = 20);

}  // namespace hpsphere

#endif  // HPSPHERE_REPTEST_HPP
