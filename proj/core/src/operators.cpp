#include "nidx/operators.hpp"

#include <array>
#include <cmath>

#include "nidx/errors.hpp"

namespace nidx {
namespace {

bool is_finite(const Operator2x2& t) {
  return std::isfinite(t.t11) && std::isfinite(t.t12) && std::isfinite(t.t21) &&
         std::isfinite(t.t22);
}

}  // namespace

const Operator2x2& isometry_basis(int j) {
  static constexpr std::array<Operator2x2, 4> kBasis{{
      {1.0, 0.0, 0.0, 1.0},
      {1.0, 0.0, 0.0, -1.0},
      {0.0, 1.0, 1.0, 0.0},
      {0.0, 1.0, -1.0, 0.0},
  }};
  if (j < 1 || j > 4) throw InvalidInputError("isometry index must be in 1..4");
  return kBasis[static_cast<std::size_t>(j - 1)];
}

IsometryCoefficients to_isometry_coords(const Operator2x2& t) {
  if (!is_finite(t)) throw InvalidInputError("operator entries must be finite");
  return {0.5 * (t.t11 + t.t22), 0.5 * (t.t11 - t.t22), 0.5 * (t.t12 + t.t21),
          0.5 * (t.t12 - t.t21)};
}

Operator2x2 from_isometry_coords(const IsometryCoefficients& c) {
  if (!std::isfinite(c.a1) || !std::isfinite(c.a2) || !std::isfinite(c.a3) ||
      !std::isfinite(c.a4)) {
    throw InvalidInputError("isometry coefficients must be finite");
  }
  return {c.a1 + c.a2, c.a3 + c.a4, c.a3 - c.a4, c.a1 - c.a2};
}

Operator2x2 multiply(const Operator2x2& a, const Operator2x2& b) {
  return {a.t11 * b.t11 + a.t12 * b.t21, a.t11 * b.t12 + a.t12 * b.t22,
          a.t21 * b.t11 + a.t22 * b.t21, a.t21 * b.t12 + a.t22 * b.t22};
}

Operator2x2 conjugate_by_isometry(const Operator2x2& t, int j, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInputError("conjugation sign must be +1 or -1");
  if (!is_finite(t)) throw InvalidInputError("operator entries must be finite");
  const Operator2x2& iso = isometry_basis(j);
  // I1..I3 are involutions; I4^{-1} = -I4 = I4 transposed.
  const Operator2x2 inv = (j == 4) ? Operator2x2{0.0, -1.0, 1.0, 0.0} : iso;
  return static_cast<double>(sign) * multiply(multiply(inv, t), iso);
}

}  // namespace nidx
