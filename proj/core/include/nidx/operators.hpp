#pragma once

#include "nidx/vec2.hpp"

namespace nidx {

/// Bounded linear operator on the plane, row-major entries.
struct Operator2x2 {
  double t11 = 0.0;
  double t12 = 0.0;
  double t21 = 0.0;
  double t22 = 0.0;

  constexpr Vec2 apply(Vec2 v) const {
    return {t11 * v.x + t12 * v.y, t21 * v.x + t22 * v.y};
  }

  friend constexpr Operator2x2 operator*(double s, const Operator2x2& t) {
    return {s * t.t11, s * t.t12, s * t.t21, s * t.t22};
  }
};

/// Coordinates of an operator in the basis of the four canonical isometries
///   I1 = identity, I2 = diag(1,-1), I3 = coordinate swap,
///   I4 = rotation by -pi/2: (x, y) -> (y, -x),
/// so that T = a1*I1 + a2*I2 + a3*I3 + a4*I4.
struct IsometryCoefficients {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4 = 0.0;
};

/// The basis isometry I_j, j in 1..4.
const Operator2x2& isometry_basis(int j);

/// Change of basis between matrix entries and isometry coefficients.
/// from_isometry_coords(to_isometry_coords(T)) reproduces T entrywise.
IsometryCoefficients to_isometry_coords(const Operator2x2& t);
Operator2x2 from_isometry_coords(const IsometryCoefficients& c);

Operator2x2 multiply(const Operator2x2& a, const Operator2x2& b);

/// sign * I_j^{-1} * T * I_j with sign in {-1, +1}. In isometry coordinates
/// conjugation by I2, I3, I4 flips the sign of exactly two coefficients:
///   I2: (a1, a2, -a3, -a4), I3: (a1, -a2, a3, -a4), I4: (a1, -a2, -a3, a4).
/// Every absolute symmetric norm is invariant under all eight variants, so
/// the numerical radius is too.
Operator2x2 conjugate_by_isometry(const Operator2x2& t, int j, int sign);

}  // namespace nidx
