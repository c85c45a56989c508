#include "nidx/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nidx/detail/golden.hpp"
#include "nidx/errors.hpp"

namespace nidx {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(const Operator2x2& t) {
  if (!(std::isfinite(t.t11) && std::isfinite(t.t12) && std::isfinite(t.t21) &&
        std::isfinite(t.t22))) {
    throw InvalidInputError("operator entries must be finite");
  }
}

double poly_numerical_radius(const Norm& norm, const Operator2x2& t) {
  const auto& vs = norm.vertices();
  const auto& gs = norm.edge_functionals();
  const std::size_t m = vs.size();
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 tx = t.apply(vs[i]);
    best = std::max(best, std::fabs(dot(gs[(i + m - 1) % m], tx)));
    best = std::max(best, std::fabs(dot(gs[i], tx)));
  }
  return best;
}

double poly_operator_norm(const Norm& norm, const Operator2x2& t) {
  double best = 0.0;
  for (Vec2 v : norm.vertices()) best = std::max(best, norm.evaluate(t.apply(v)));
  return best;
}

// Max over the circle of a grid-sampled objective: the leading local maxima of
// the sample array bracket golden-section refinements. Ties between equal
// values resolve toward the smaller angle.
template <class F>
double circle_max(const std::vector<double>& values, F&& eval, const GridOptions& options) {
  const std::size_t n = values.size();
  double best = values[0];
  double best_theta = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i] > best) {
      best = values[i];
      best_theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    }
  }
  if (options.refine_iterations <= 0 || options.refine_brackets <= 0) return best;

  struct Peak {
    double value;
    std::size_t index;
  };
  std::vector<Peak> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    double prev = values[(i + n - 1) % n];
    double next = values[(i + 1) % n];
    if (values[i] >= prev && values[i] >= next) peaks.push_back({values[i], i});
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
  });
  if (peaks.size() > static_cast<std::size_t>(options.refine_brackets)) {
    peaks.resize(static_cast<std::size_t>(options.refine_brackets));
  }

  const double step = kTwoPi / static_cast<double>(n);
  for (const Peak& peak : peaks) {
    double center = step * static_cast<double>(peak.index);
    auto refined =
        detail::golden_max(eval, center - step, center + step, options.refine_iterations);
    if (refined.value > best || (refined.value == best && refined.x < best_theta)) {
      best = refined.value;
      best_theta = refined.x;
    }
  }
  return best;
}

}  // namespace

std::vector<double> numerical_range_values(const Norm& norm, const Operator2x2& t,
                                           double theta) {
  require_finite(t);
  if (!std::isfinite(theta)) throw InvalidInputError("theta must be finite");
  Vec2 x = norm.sphere_point(theta);
  SupportSet support = norm.supporting_functionals(x);
  Vec2 tx = t.apply(x);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(support.count));
  for (Vec2 f : support.items()) values.push_back(dot(f, tx));
  return values;
}

RadiusEngine::RadiusEngine(Norm norm, GridOptions options)
    : norm_(std::move(norm)), options_(options) {
  if (options_.grid_size < 8) throw InvalidInputError("grid_size must be at least 8");
  if (norm_.family() == NormFamily::kLp) {
    samples_.reserve(static_cast<std::size_t>(options_.grid_size));
    for (int i = 0; i < options_.grid_size; ++i) {
      double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(options_.grid_size);
      Vec2 x = norm_.sphere_point(theta);
      samples_.push_back({x, norm_.supporting_functionals(x)});
    }
  }
}

double RadiusEngine::grid_radius_on(const std::vector<Sample>& samples,
                                    const Operator2x2& t) const {
  std::vector<double> values(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Vec2 tx = t.apply(samples[i].x);
    double v = 0.0;
    for (Vec2 f : samples[i].support.items()) v = std::max(v, std::fabs(dot(f, tx)));
    values[i] = v;
  }
  auto eval = [this, &t](double theta) {
    Vec2 x = norm_.sphere_point(theta);
    Vec2 tx = t.apply(x);
    double v = 0.0;
    for (Vec2 f : norm_.supporting_functionals(x).items()) v = std::max(v, std::fabs(dot(f, tx)));
    return v;
  };
  return circle_max(values, eval, options_);
}

double RadiusEngine::grid_norm_on(const std::vector<Sample>& samples,
                                  const Operator2x2& t) const {
  std::vector<double> values(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    values[i] = norm_.evaluate(t.apply(samples[i].x));
  }
  auto eval = [this, &t](double theta) { return norm_.evaluate(t.apply(norm_.sphere_point(theta))); };
  return circle_max(values, eval, options_);
}

double RadiusEngine::numerical_radius(const Operator2x2& t) const {
  require_finite(t);
  if (norm_.family() == NormFamily::kPolyhedral) return poly_numerical_radius(norm_, t);
  return grid_radius_on(samples_, t);
}

double RadiusEngine::operator_norm(const Operator2x2& t) const {
  require_finite(t);
  if (norm_.family() == NormFamily::kPolyhedral) return poly_operator_norm(norm_, t);
  return grid_norm_on(samples_, t);
}

double RadiusEngine::grid_numerical_radius(const Operator2x2& t) const {
  require_finite(t);
  if (norm_.family() == NormFamily::kLp) return grid_radius_on(samples_, t);
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(options_.grid_size));
  for (int i = 0; i < options_.grid_size; ++i) {
    double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(options_.grid_size);
    Vec2 x = norm_.sphere_point(theta);
    samples.push_back({x, norm_.supporting_functionals(x)});
  }
  return grid_radius_on(samples, t);
}

double RadiusEngine::grid_operator_norm(const Operator2x2& t) const {
  require_finite(t);
  if (norm_.family() == NormFamily::kLp) return grid_norm_on(samples_, t);
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(options_.grid_size));
  for (int i = 0; i < options_.grid_size; ++i) {
    double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(options_.grid_size);
    Vec2 x = norm_.sphere_point(theta);
    samples.push_back({x, SupportSet{}});
  }
  return grid_norm_on(samples, t);
}

double numerical_radius(const Norm& norm, const Operator2x2& t, const GridOptions& options) {
  return RadiusEngine(norm, options).numerical_radius(t);
}

double operator_norm(const Norm& norm, const Operator2x2& t, const GridOptions& options) {
  return RadiusEngine(norm, options).operator_norm(t);
}

double grid_numerical_radius(const Norm& norm, const Operator2x2& t, const GridOptions& options) {
  return RadiusEngine(norm, options).grid_numerical_radius(t);
}

double grid_operator_norm(const Norm& norm, const Operator2x2& t, const GridOptions& options) {
  return RadiusEngine(norm, options).grid_operator_norm(t);
}

}  // namespace nidx
