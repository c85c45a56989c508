#pragma once

#include <stdexcept>

namespace nidx {

/// A value passed to an operation lies outside its domain (non-finite entry,
/// zero vector where a direction is required, bad enum index, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A norm descriptor is malformed: exponent outside (1, inf), empty or
/// degenerate vertex set, vertices outside the first quadrant.
class InvalidDescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition fails on otherwise well-formed input, e.g. a
/// point handed to supporting_functionals that is not on the unit sphere.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed: a duality pair whose contact
/// coefficients violate the ordering c4 <= min(c1, c2, c3), a contact vector
/// that no valid pair can produce, or a polytope with no feasible vertex.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The certified fast path was asked for an exponent it does not cover.
class CertificationRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace nidx
