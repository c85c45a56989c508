#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "nidx/vec2.hpp"

namespace nidx {

/// Duality pairing tolerance: |x*(x) - 1| must stay below this for a pair to
/// be accepted.
inline constexpr double kPairTolerance = 1e-10;
/// Dual-norm normalization tolerance for supporting functionals.
inline constexpr double kDualTolerance = 1e-10;
/// Angular tolerance below which a sphere point counts as a polygon vertex.
/// Ambiguous points get the vertex treatment (both adjacent functionals).
inline constexpr double kVertexAngleTolerance = 1e-9;

enum class NormFamily { kLp, kPolyhedral };

/// Extreme supporting functionals at a unit-sphere point x: the norm-one
/// functionals f with f(x) = 1 that are extreme points of the face they span.
/// A smooth sphere point carries one functional; a polygon vertex carries the
/// two adjacent edge functionals (every convex combination also supports).
struct SupportSet {
  Vec2 point;
  std::array<Vec2, 2> functionals{};
  int count = 0;

  std::span<const Vec2> items() const {
    return {functionals.data(), static_cast<std::size_t>(count)};
  }
};

/// A point on the unit sphere together with a norming functional:
/// ||x|| = 1, ||xstar||_dual = 1, xstar(x) = 1 (all within kPairTolerance).
struct DualityPair {
  Vec2 x;
  Vec2 xstar;
};

/// Absolute symmetric normalized norm on the plane. Two families:
///
///  - lp(p) with 1 < p < inf: ||(a,b)|| = (|a|^p + |b|^p)^(1/p). The endpoint
///    norms l1 and linf are represented only through the polyhedral family.
///  - polyhedral(V) where V lists the unit-ball vertices lying in the first
///    quadrant. The full vertex set is the closure of V under sign changes
///    and coordinate swap; the norm is the Minkowski gauge of that polygon.
///
/// Polyhedral construction canonicalizes: symmetric closure, duplicate points
/// merged (coordinate tolerance 1e-12), convex hull with collinear points
/// removed, vertices ordered counterclockwise starting at the smallest polar
/// angle. Construction accepts non-normalized polygons (e.g. gauge((1,0)) != 1);
/// validate() reports such defects instead.
class Norm {
 public:
  static Norm lp(double p);
  static Norm polyhedral(std::vector<Vec2> first_quadrant_vertices);

  NormFamily family() const { return family_; }

  /// Lp only: the exponent p, respectively its conjugate q = p/(p-1).
  double exponent() const;
  double dual_exponent() const;

  /// Polyhedral only: full vertex set, counterclockwise; functional of the
  /// edge from vertices()[i] to vertices()[(i+1) % n]; the descriptor input.
  const std::vector<Vec2>& vertices() const;
  const std::vector<Vec2>& edge_functionals() const;
  const std::vector<Vec2>& first_quadrant_vertices() const;

  /// ||v||. Polyhedral evaluation is the max of the edge functionals at v,
  /// which equals the Minkowski gauge of the vertex polygon.
  double evaluate(Vec2 v) const;

  /// Dual norm of the functional f: the conjugate lp norm, respectively the
  /// max of |f| over the unit-ball vertices.
  double dual_evaluate(Vec2 f) const;

  /// The unit-sphere point in direction theta: (cos t, sin t)/||(cos t, sin t)||.
  Vec2 sphere_point(double theta) const;

  /// Extreme norming functionals at a unit-sphere point x.
  SupportSet supporting_functionals(Vec2 x) const;

  /// Short human-readable tag for error messages and reports.
  std::string describe() const;

 private:
  Norm() = default;

  NormFamily family_ = NormFamily::kLp;
  double p_ = 2.0;
  double q_ = 2.0;
  std::vector<Vec2> input_vertices_;
  std::vector<Vec2> vertices_;
  std::vector<Vec2> edge_functionals_;
  std::vector<double> vertex_angles_;

  std::size_t locate_edge(double theta) const;
};

/// The canonical duality pair of the lp norm along the first-octant
/// parametrization, t in [0, 1]:
///   x_t    = (1, t)       / (1 + t^p)^(1/p)
///   xstar_t= (1, t^(p-1)) / (1 + t^p)^((p-1)/p)
DualityPair lp_duality_pair(double p, double t);

/// Result of validate(). `property` names the first violated requirement
/// (normalization, absoluteness, symmetry, convexity, homogeneity) and
/// `witness` is a point exhibiting the violation.
struct ValidationReport {
  bool ok = true;
  std::string property;
  Vec2 witness{};
  std::string detail;
};

/// Checks that the descriptor defines an absolute symmetric normalized norm.
/// Samples are deterministic; the report never throws.
ValidationReport validate(const Norm& norm);

}  // namespace nidx
