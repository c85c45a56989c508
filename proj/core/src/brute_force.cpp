#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "nidx/errors.hpp"
#include "nidx/index.hpp"

namespace nidx {
namespace {

constexpr double kPi = std::numbers::pi;

// Angles (phi1, phi2, phi3) parametrize a Euclidean unit direction
//   u = (cos p1, sin p1 cos p2, sin p1 sin p2 cos p3, sin p1 sin p2 sin p3)
// which is rescaled onto the sphere sum |a_j| = 1 of coefficient space.
// phi1 in [0, pi/2] restricts to a1 >= 0, i.e. half of the sphere; the other
// half is covered by v(-T) = v(T).
struct Angles {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

Operator2x2 operator_at(const Angles& a) {
  double s1 = std::sin(a.phi1), c1 = std::cos(a.phi1);
  double s2 = std::sin(a.phi2), c2 = std::cos(a.phi2);
  double s3 = std::sin(a.phi3), c3 = std::cos(a.phi3);
  std::array<double, 4> u{c1, s1 * c2, s1 * s2 * c3, s1 * s2 * s3};
  double l1 = std::fabs(u[0]) + std::fabs(u[1]) + std::fabs(u[2]) + std::fabs(u[3]);
  return from_isometry_coords({u[0] / l1, u[1] / l1, u[2] / l1, u[3] / l1});
}

// Reduced-resolution sphere table for the lp coarse scan. The radius comes
// from cached supporting functionals; the operator norm maximizes
// |u|^p + |v|^p over the cached sphere points and takes one root at the end.
class CoarseLpTable {
 public:
  CoarseLpTable(const Norm& norm, int samples) : p_(norm.exponent()) {
    xs_.reserve(static_cast<std::size_t>(samples));
    fs_.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples);
      Vec2 x = norm.sphere_point(theta);
      xs_.push_back(x);
      fs_.push_back(norm.supporting_functionals(x).functionals[0]);
    }
  }

  double ratio(const Operator2x2& t) const {
    double radius = 0.0;
    double norm_pow = 0.0;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      Vec2 tx = t.apply(xs_[i]);
      radius = std::max(radius, std::fabs(dot(fs_[i], tx)));
      norm_pow = std::max(norm_pow, std::pow(std::fabs(tx.x), p_) + std::pow(std::fabs(tx.y), p_));
    }
    return radius / std::pow(norm_pow, 1.0 / p_);
  }

 private:
  double p_;
  std::vector<Vec2> xs_;
  std::vector<Vec2> fs_;
};

}  // namespace

IndexEstimate brute_force_index(const Norm& norm, int resolution) {
  ValidationReport vr = validate(norm);
  if (!vr.ok) {
    throw InvalidDescriptorError("brute_force_index: " + norm.describe() + " fails " + vr.property);
  }
  if (resolution < 8) throw InvalidInputError("brute_force_index requires resolution >= 8");

  const bool lp = norm.family() == NormFamily::kLp;

  // Three evaluation tiers: a cheap table for the full scan, a mid-resolution
  // engine for pattern search, and default options for the reported value.
  // Polyhedral norms are exact at every tier.
  const CoarseLpTable* coarse_table = nullptr;
  CoarseLpTable table = lp ? CoarseLpTable(norm, 128) : CoarseLpTable(Norm::lp(2.0), 8);
  if (lp) coarse_table = &table;
  RadiusEngine mid(norm, lp ? GridOptions{1024, 30, 4} : GridOptions{});

  auto mid_ratio = [&](const Operator2x2& t) {
    return mid.numerical_radius(t) / mid.operator_norm(t);
  };
  auto coarse_ratio = [&](const Operator2x2& t) {
    return coarse_table ? coarse_table->ratio(t) : mid_ratio(t);
  };

  const double d1 = 0.5 * kPi / static_cast<double>(resolution - 1);
  const double d2 = kPi / static_cast<double>(resolution - 1);
  const double d3 = 2.0 * kPi / static_cast<double>(resolution);

  Angles best_angles;
  double best = coarse_ratio(operator_at(best_angles));
  auto consider = [&](const Angles& a) {
    double r = coarse_ratio(operator_at(a));
    if (r < best) {
      best = r;
      best_angles = a;
    }
  };

  for (int i1 = 0; i1 < resolution; ++i1) {
    for (int i2 = 0; i2 < resolution; ++i2) {
      for (int i3 = 0; i3 < resolution; ++i3) {
        consider({i1 * d1, i2 * d2, i3 * d3});
      }
    }
  }
  // Coefficient-axis seeds; the last one is T = I4, whose ratio v(I4)/1 makes
  // the estimate an upper bound for the radius-based pipeline. Seeds compete
  // with the best grid cell at mid precision, so coarse-table error cannot
  // discard them.
  const std::array<Angles, 4> seeds{Angles{0.0, 0.0, 0.0}, Angles{0.5 * kPi, 0.0, 0.0},
                                    Angles{0.5 * kPi, 0.5 * kPi, 0.0},
                                    Angles{0.5 * kPi, 0.5 * kPi, 0.5 * kPi}};

  Angles current = best_angles;
  double current_value = mid_ratio(operator_at(current));
  for (const Angles& seed : seeds) {
    double value = mid_ratio(operator_at(seed));
    if (value < current_value) {
      current_value = value;
      current = seed;
    }
  }

  // Pattern search: probe +/- step on each angle, move to the best strict
  // improvement, halve the steps when no probe improves. 40 halvings.
  std::array<double, 3> steps{d1, d2, d3};
  for (int round = 0; round < 40; ++round) {
    for (int move = 0; move < 64; ++move) {
      Angles next = current;
      double next_value = current_value;
      for (int axis = 0; axis < 3; ++axis) {
        for (double dir : {-1.0, 1.0}) {
          Angles probe = current;
          double* coord = axis == 0 ? &probe.phi1 : axis == 1 ? &probe.phi2 : &probe.phi3;
          *coord += dir * steps[static_cast<std::size_t>(axis)];
          double value = mid_ratio(operator_at(probe));
          if (value < next_value) {
            next_value = value;
            next = probe;
          }
        }
      }
      if (next_value >= current_value) break;
      current = next;
      current_value = next_value;
    }
    for (double& s : steps) s *= 0.5;
  }

  IndexEstimate estimate;
  estimate.argmin = operator_at(current);
  RadiusEngine full(norm);
  // v(T) <= ||T|| holds exactly; the min guards the last bits of rounding.
  estimate.value =
      std::min(1.0, full.numerical_radius(estimate.argmin) / full.operator_norm(estimate.argmin));
  estimate.grid_resolution = resolution;
  estimate.refined = true;
  return estimate;
}

}  // namespace nidx
