#include "nidx/norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "nidx/errors.hpp"

namespace nidx {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Coordinate tolerance for merging duplicate vertices and dropping collinear
// ones during canonicalization.
constexpr double kVertexMergeTolerance = 1e-12;

double wrap_angle(double a) {
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double angle_of(Vec2 v) { return wrap_angle(std::atan2(v.y, v.x)); }

double angular_distance(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

// (|x|^p + |y|^p)^(1/p), scaled by the larger coordinate so that large
// exponents neither overflow nor lose the leading digits.
double lp_value(double p, Vec2 v) {
  double ax = std::fabs(v.x);
  double ay = std::fabs(v.y);
  double hi = std::max(ax, ay);
  if (hi == 0.0) return 0.0;
  double r = std::min(ax, ay) / hi;
  return hi * std::pow(1.0 + std::pow(r, p), 1.0 / p);
}

// Symmetric closure: images of every input vertex under sign changes and
// coordinate swap. Zero vertices contribute nothing and are dropped.
std::vector<Vec2> symmetric_closure(const std::vector<Vec2>& first_quadrant) {
  std::vector<Vec2> points;
  points.reserve(first_quadrant.size() * 8);
  for (Vec2 v : first_quadrant) {
    if (v.x == 0.0 && v.y == 0.0) continue;
    for (double sx : {1.0, -1.0}) {
      for (double sy : {1.0, -1.0}) {
        points.push_back({sx * v.x, sy * v.y});
        points.push_back({sx * v.y, sy * v.x});
      }
    }
  }
  return points;
}

// Monotone-chain convex hull, counterclockwise, collinear points removed.
std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](Vec2 a, Vec2 b) {
                             return std::fabs(a.x - b.x) <= kVertexMergeTolerance &&
                                    std::fabs(a.y - b.y) <= kVertexMergeTolerance;
                           }),
               points.end());
  const std::size_t n = points.size();
  if (n < 3) return points;

  double scale = 0.0;
  for (Vec2 v : points) scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
  const double turn_eps = kVertexMergeTolerance * std::max(1.0, scale * scale);

  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= turn_eps) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= turn_eps) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

}  // namespace

Norm Norm::lp(double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidDescriptorError("lp norm requires a finite exponent with 1 < p");
  }
  Norm n;
  n.family_ = NormFamily::kLp;
  n.p_ = p;
  n.q_ = p / (p - 1.0);
  return n;
}

Norm Norm::polyhedral(std::vector<Vec2> first_quadrant_vertices) {
  if (first_quadrant_vertices.empty()) {
    throw InvalidDescriptorError("polyhedral norm requires at least one vertex");
  }
  for (Vec2 v : first_quadrant_vertices) {
    if (!is_finite(v)) throw InvalidDescriptorError("polyhedral vertex entries must be finite");
    if (v.x < 0.0 || v.y < 0.0) {
      throw InvalidDescriptorError("polyhedral vertices must lie in the first quadrant");
    }
  }

  std::vector<Vec2> hull = convex_hull(symmetric_closure(first_quadrant_vertices));
  // A symmetric polygon with nonempty interior has at least four corners.
  if (hull.size() < 4) {
    throw InvalidDescriptorError("polyhedral vertex set is degenerate (no interior)");
  }

  Norm n;
  n.family_ = NormFamily::kPolyhedral;
  n.input_vertices_ = std::move(first_quadrant_vertices);

  // Rotate so the vertex with the smallest polar angle comes first.
  std::size_t start = 0;
  double best = angle_of(hull[0]);
  for (std::size_t i = 1; i < hull.size(); ++i) {
    double a = angle_of(hull[i]);
    if (a < best) {
      best = a;
      start = i;
    }
  }
  std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());
  n.vertices_ = std::move(hull);

  const std::size_t m = n.vertices_.size();
  n.vertex_angles_.resize(m);
  n.edge_functionals_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    n.vertex_angles_[i] = angle_of(n.vertices_[i]);
    Vec2 vi = n.vertices_[i];
    Vec2 vj = n.vertices_[(i + 1) % m];
    double det = cross(vi, vj);  // positive: counterclockwise with 0 inside
    if (!(det > kVertexMergeTolerance)) {
      throw InvalidDescriptorError("polyhedral vertex set does not surround the origin");
    }
    n.edge_functionals_[i] = {(vj.y - vi.y) / det, (vi.x - vj.x) / det};
  }
  return n;
}

double Norm::exponent() const {
  if (family_ != NormFamily::kLp) throw InvalidInputError("exponent() requires an lp norm");
  return p_;
}

double Norm::dual_exponent() const {
  if (family_ != NormFamily::kLp) throw InvalidInputError("dual_exponent() requires an lp norm");
  return q_;
}

const std::vector<Vec2>& Norm::vertices() const {
  if (family_ != NormFamily::kPolyhedral) {
    throw InvalidInputError("vertices() requires a polyhedral norm");
  }
  return vertices_;
}

const std::vector<Vec2>& Norm::edge_functionals() const {
  if (family_ != NormFamily::kPolyhedral) {
    throw InvalidInputError("edge_functionals() requires a polyhedral norm");
  }
  return edge_functionals_;
}

const std::vector<Vec2>& Norm::first_quadrant_vertices() const {
  if (family_ != NormFamily::kPolyhedral) {
    throw InvalidInputError("first_quadrant_vertices() requires a polyhedral norm");
  }
  return input_vertices_;
}

double Norm::evaluate(Vec2 v) const {
  if (!is_finite(v)) throw InvalidInputError("evaluate: vector entries must be finite");
  if (family_ == NormFamily::kLp) return lp_value(p_, v);
  double best = 0.0;
  for (Vec2 g : edge_functionals_) best = std::max(best, dot(g, v));
  return best;
}

double Norm::dual_evaluate(Vec2 f) const {
  if (!is_finite(f)) throw InvalidInputError("dual_evaluate: functional entries must be finite");
  if (family_ == NormFamily::kLp) return lp_value(q_, f);
  double best = 0.0;
  for (Vec2 v : vertices_) best = std::max(best, std::fabs(dot(f, v)));
  return best;
}

Vec2 Norm::sphere_point(double theta) const {
  if (!std::isfinite(theta)) throw InvalidInputError("sphere_point: theta must be finite");
  Vec2 u{std::cos(theta), std::sin(theta)};
  return (1.0 / evaluate(u)) * u;
}

std::size_t Norm::locate_edge(double theta) const {
  // vertex_angles_ is strictly increasing; the edge index equals the index of
  // the last vertex angle <= theta, wrapping below vertex_angles_[0].
  auto it = std::upper_bound(vertex_angles_.begin(), vertex_angles_.end(), theta);
  std::size_t next = static_cast<std::size_t>(it - vertex_angles_.begin()) % vertex_angles_.size();
  return (next + vertex_angles_.size() - 1) % vertex_angles_.size();
}

SupportSet Norm::supporting_functionals(Vec2 x) const {
  if (!is_finite(x)) throw InvalidInputError("supporting_functionals: entries must be finite");
  if (x.x == 0.0 && x.y == 0.0) {
    throw InvalidInputError("supporting_functionals: the origin has no direction");
  }
  if (std::fabs(evaluate(x) - 1.0) > kPairTolerance) {
    throw PreconditionError("supporting_functionals: x must lie on the unit sphere");
  }

  SupportSet s;
  s.point = x;
  if (family_ == NormFamily::kLp) {
    auto component = [this](double v) {
      double a = std::pow(std::fabs(v), p_ - 1.0);
      return v < 0.0 ? -a : a;
    };
    s.functionals[0] = {component(x.x), component(x.y)};
    s.count = 1;
    return s;
  }

  const std::size_t m = vertices_.size();
  const double theta = angle_of(x);
  const std::size_t i = locate_edge(theta);
  const std::size_t next = (i + 1) % m;

  auto vertex_support = [&](std::size_t v) {
    s.functionals[0] = edge_functionals_[(v + m - 1) % m];
    s.functionals[1] = edge_functionals_[v];
    s.count = 2;
  };
  if (angular_distance(theta, vertex_angles_[i]) <= kVertexAngleTolerance) {
    vertex_support(i);
  } else if (angular_distance(theta, vertex_angles_[next]) <= kVertexAngleTolerance) {
    vertex_support(next);
  } else {
    s.functionals[0] = edge_functionals_[i];
    s.count = 1;
  }
  return s;
}

std::string Norm::describe() const {
  char buf[64];
  if (family_ == NormFamily::kLp) {
    std::snprintf(buf, sizeof buf, "lp(p=%.12g)", p_);
  } else {
    std::snprintf(buf, sizeof buf, "polyhedral(%zu vertices)", vertices_.size());
  }
  return buf;
}

DualityPair lp_duality_pair(double p, double t) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidInputError("lp_duality_pair requires a finite exponent with 1 < p");
  }
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
    throw InvalidInputError("lp_duality_pair requires t in [0, 1]");
  }
  double tp = std::pow(t, p);
  double denom_x = std::pow(1.0 + tp, 1.0 / p);
  double denom_f = std::pow(1.0 + tp, (p - 1.0) / p);
  DualityPair pair;
  pair.x = {1.0 / denom_x, t / denom_x};
  pair.xstar = {1.0 / denom_f, std::pow(t, p - 1.0) / denom_f};
  return pair;
}

}  // namespace nidx
