#ifndef HPSPHERE_ERRORS_HPP
#define HPSPHERE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hpsphere {

/// Mismatched vector/matrix dimensions in quaternionic linear algebra.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested weight lies outside the weight set of a block.
class WeightError : public std::invalid_argument {
 public:
  explicit WeightError(const std::string& what) : std::invalid_argument(what) {}
};

/// Representation data that cannot arise from a quaternionic direct sum.
class InvalidRepresentation : public std::invalid_argument {
 public:
  explicit InvalidRepresentation(const std::string& what) : std::invalid_argument(what) {}
};

/// Orbit collapses to a point (|X|^2 + |Y|^2 = 0); no induced metric.
class DegenerateOrbit : public std::runtime_error {
 public:
  explicit DegenerateOrbit(const std::string& what) : std::runtime_error(what) {}
};

/// Pulled-back metric fails the conformality tolerance at a chart point.
class NotConformal : public std::runtime_error {
 public:
  explicit NotConformal(const std::string& what) : std::runtime_error(what) {}
};

/// Family parameters violate the parity/range constraints of the classification.
class InvalidFamily : public std::invalid_argument {
 public:
  explicit InvalidFamily(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hpsphere

#endif  // HPSPHERE_ERRORS_HPP
