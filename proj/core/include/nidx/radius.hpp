#pragma once

#include <vector>

#include "nidx/norm.hpp"
#include "nidx/operators.hpp"

namespace nidx {

/// Angular search parameters for the lp (smooth) code path. The circle is
/// sampled at grid_size points; the brackets around the leading local maxima
/// are then narrowed by golden-section iterations. Defaults give operator
/// norms to ~1e-11 and numerical radii to ~1e-10 absolute accuracy.
struct GridOptions {
  int grid_size = 4096;
  int refine_iterations = 60;
  int refine_brackets = 8;
};

/// Values of the numerical range of T seen from the sphere point at angle
/// theta: { f(T x) : f extreme norming functional at x = sphere_point(theta) }.
std::vector<double> numerical_range_values(const Norm& norm, const Operator2x2& t,
                                           double theta);

/// Caches the sphere samples of a norm so that many operators can be measured
/// against it cheaply. All methods are const and safe to call concurrently.
///
/// Polyhedral norms take exact finite paths: the operator norm is the max of
/// ||T v|| over unit-ball vertices, and the numerical radius is the max of
/// |f(T v)| over (vertex, adjacent edge functional) pairs. Both rest on the
/// fact that x -> f(T x) is affine on each edge, so extremes sit at vertices.
/// The grid_* methods force the generic angular-scan route on any family,
/// which is useful as an independent cross-check of the exact enumeration.
class RadiusEngine {
 public:
  explicit RadiusEngine(Norm norm, GridOptions options = {});

  const Norm& norm() const { return norm_; }
  const GridOptions& options() const { return options_; }

  double numerical_radius(const Operator2x2& t) const;
  double operator_norm(const Operator2x2& t) const;

  double grid_numerical_radius(const Operator2x2& t) const;
  double grid_operator_norm(const Operator2x2& t) const;

 private:
  struct Sample {
    Vec2 x;
    SupportSet support;
  };

  Norm norm_;
  GridOptions options_;
  std::vector<Sample> samples_;  // empty for polyhedral norms

  double grid_radius_on(const std::vector<Sample>& samples, const Operator2x2& t) const;
  double grid_norm_on(const std::vector<Sample>& samples, const Operator2x2& t) const;
};

/// One-shot conveniences; construct a RadiusEngine when measuring many
/// operators against the same norm.
double numerical_radius(const Norm& norm, const Operator2x2& t, const GridOptions& options = {});
double operator_norm(const Norm& norm, const Operator2x2& t, const GridOptions& options = {});
double grid_numerical_radius(const Norm& norm, const Operator2x2& t, const GridOptions& options = {});
double grid_operator_norm(const Norm& norm, const Operator2x2& t, const GridOptions& options = {});

}  // namespace nidx
