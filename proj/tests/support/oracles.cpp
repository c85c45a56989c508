#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace testsupport {
namespace {

// f(alpha) = sum_k alpha_k c_k - 2 min_j alpha_j c_j; the contact-bound
// minimax objective after rewriting max_j (sum_{k != j} - alpha_j).
double simplex_objective(const double a[4], const double c[4]) {
  double s = a[0] * c[0] + a[1] * c[1] + a[2] * c[2] + a[3] * c[3];
  double m = a[0] * c[0];
  for (int j = 1; j < 4; ++j) m = std::min(m, a[j] * c[j]);
  return s - 2.0 * m;
}

}  // namespace

namespace {

// Golden-section MINIMIZATION. Correct for convex f (including flat pieces):
// when f(c) = f(d) the minimum lies in [c, d], so either discard is safe.
// Endpoints are probed explicitly because the optimum may sit on them.
template <typename F>
double golden_min(F&& f, double a, double b, int iterations) {
  double best = std::min(f(a), f(b));
  if (b - a <= 0.0) return best;
  const double k = 0.6180339887498949;
  double c = b - k * (b - a);
  double d = a + k * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - k * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + k * (b - a);
      fd = f(d);
    }
  }
  return std::min(best, std::min(fc, fd));
}

}  // namespace

double simplex_search_min(const nidx::ContactVector& contact) {
  const double c[4] = {contact.c1, contact.c2, contact.c3, contact.c4};
  // f is convex (max of linear forms), and partial minimization of a convex
  // function over a convex set is convex, so each nested 1-D search minimizes
  // a genuinely convex function. 96 iterations + 4 probes per layer make the
  // search evaluate 100^3 = 1e6 simplex points per call.
  const int kIterations = 96;
  auto value_at = [&](double a1, double a2, double a3) {
    const double a4 = std::max(0.0, 1.0 - a1 - a2 - a3);
    const double a[4] = {a1, a2, a3, a4};
    return simplex_objective(a, c);
  };
  auto min3 = [&](double a1, double a2) {
    return golden_min([&](double a3) { return value_at(a1, a2, a3); }, 0.0,
                      std::max(0.0, 1.0 - a1 - a2), kIterations);
  };
  auto min2 = [&](double a1) {
    return golden_min([&](double a2) { return min3(a1, a2); }, 0.0, std::max(0.0, 1.0 - a1),
                      kIterations);
  };
  return golden_min(min2, 0.0, 1.0, kIterations);
}

double gauge_by_ray(const std::vector<nidx::Vec2>& vertices, const nidx::Vec2& point) {
  if (point.x == 0.0 && point.y == 0.0) return 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const nidx::Vec2& a = vertices[i];
    const nidx::Vec2& b = vertices[(i + 1) % n];
    // Solve t * point = a + u * (b - a) for t > 0, u in [0, 1].
    const nidx::Vec2 e{b.x - a.x, b.y - a.y};
    const double det = point.y * e.x - point.x * e.y;  // cross(e, point)
    if (std::fabs(det) < 1e-14) continue;
    const double t = (a.y * e.x - a.x * e.y) / det;
    const double u = std::fabs(e.x) >= std::fabs(e.y) ? (t * point.x - a.x) / e.x
                                                      : (t * point.y - a.y) / e.y;
    if (t > 0.0 && u >= -1e-9 && u <= 1.0 + 1e-9) {
      return 1.0 / t;  // boundary hit at t*point, so gauge(point) = 1/t
    }
  }
  throw std::runtime_error("gauge_by_ray: no boundary crossing found");
}

double dual_sup_by_grid(const nidx::Norm& norm, const nidx::Vec2& f, int samples) {
  const double two_pi = 2.0 * std::numbers::pi;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < samples; ++i) {
    double theta = two_pi * static_cast<double>(i) / samples;
    nidx::Vec2 x = norm.sphere_point(theta);
    double value = std::fabs(dot(f, x));
    if (value > best) {
      best = value;
      best_i = i;
    }
  }
  auto eval = [&](double theta) { return std::fabs(dot(f, norm.sphere_point(theta))); };
  double a = two_pi * (best_i - 1.0) / samples;
  double b = two_pi * (best_i + 1.0) / samples;
  const double k = 0.6180339887498949;
  double c = b - k * (b - a), d = a + k * (b - a);
  double fc = eval(c), fd = eval(d);
  for (int i = 0; i < 80; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - k * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + k * (b - a);
      fd = eval(d);
    }
  }
  return std::max(best, std::max(fc, fd));
}

double m3_grid_oracle() {
  double best = 0.0;
  for (long i = 0; i <= 1000000; ++i) {
    double t = static_cast<double>(i) / 1000000.0;
    double value = (t - t * t) / (1.0 + t * t * t);
    best = std::max(best, value);
  }
  return best;
}

nidx::Norm random_polyhedral_norm(SplitMix64& rng) {
  std::vector<nidx::Vec2> points{{1.0, 0.0}};
  int extra = 1 + static_cast<int>(rng.next() % 4);
  for (int k = 0; k < extra; ++k) {
    points.push_back({rng.uniform(), rng.uniform()});
  }
  return nidx::Norm::polyhedral(points);
}

}  // namespace testsupport
