#include "nidx/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nidx/detail/golden.hpp"
#include "nidx/errors.hpp"

namespace nidx {
namespace {

constexpr double kContactOrderTolerance = 1e-10;
constexpr double kExactnessTolerance = 1e-12;
constexpr double kMaximizerValueTolerance = 1e-9;

// |t^(p-1) - t| / (1 + t^p) on [0, 1]: the numerical-range value of I4 along
// the lp duality parametrization.
double i4_range_value(double p, double t) {
  return std::fabs(std::pow(t, p - 1.0) - t) / (1.0 + std::pow(t, p));
}

struct GridPeak {
  double value;
  double t;
};

// Grid scan of f on [0, 1] with golden-section refinement of the leading
// local maxima. Ties resolve toward the smaller t.
template <class F>
std::vector<GridPeak> refined_maxima(F&& f, int intervals, int keep) {
  std::vector<double> values(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    values[static_cast<std::size_t>(i)] = f(static_cast<double>(i) / intervals);
  }

  std::vector<std::size_t> peak_indices;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double prev = i > 0 ? values[i - 1] : -1.0;
    double next = i + 1 < values.size() ? values[i + 1] : -1.0;
    if (values[i] >= prev && values[i] >= next) peak_indices.push_back(i);
  }
  std::sort(peak_indices.begin(), peak_indices.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  });
  if (peak_indices.size() > static_cast<std::size_t>(keep)) {
    peak_indices.resize(static_cast<std::size_t>(keep));
  }

  const double step = 1.0 / intervals;
  std::vector<GridPeak> peaks;
  for (std::size_t idx : peak_indices) {
    double center = static_cast<double>(idx) * step;
    double lo = std::max(0.0, center - step);
    double hi = std::min(1.0, center + step);
    auto refined = detail::golden_max(f, lo, hi, 80);
    GridPeak peak{values[idx], center};
    if (refined.value > peak.value) peak = {refined.value, refined.x};
    peaks.push_back(peak);
  }
  return peaks;
}

void check_contact(const ContactVector& c, const char* where) {
  for (double v : {c.c1, c.c2, c.c3, c.c4}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidInputError(std::string(where) + ": contact coefficients must be finite and >= 0");
    }
  }
  if (std::fabs(c.c1 - 1.0) > 1e-9) {
    throw PreconditionError(std::string(where) + ": contact vector requires c1 = 1");
  }
  if (c.c4 > std::min({c.c1, c.c2, c.c3}) + kContactOrderTolerance) {
    throw PreconditionError(std::string(where) +
                            ": contact vector violates c4 <= min(c1, c2, c3)");
  }
}

}  // namespace

MpResult mp_constant(double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidInputError("mp_constant requires a finite exponent with 1 < p");
  }
  auto f = [p](double t) { return i4_range_value(p, t); };
  MpResult best{f(0.0), 0.0};
  for (const GridPeak& peak : refined_maxima(f, 10000, 4)) {
    if (peak.value > best.value) best = {peak.value, peak.t};
  }
  return best;
}

double conjugate_exponent(double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidInputError("conjugate_exponent requires a finite exponent with 1 < p");
  }
  return p / (p - 1.0);
}

std::vector<RadiusAttainment> radius_i4_maximizers(const Norm& norm) {
  std::vector<RadiusAttainment> out;

  if (norm.family() == NormFamily::kLp) {
    const double p = norm.exponent();
    auto f = [p](double t) { return i4_range_value(p, t); };
    std::vector<GridPeak> peaks = refined_maxima(f, 10000, 8);
    double best = 0.0;
    for (const GridPeak& peak : peaks) best = std::max(best, peak.value);
    if (best == 0.0) {
      // Flat zero range (p = 2): every pair attains; report the t = 0 pair.
      out.push_back({lp_duality_pair(p, 0.0), 0.0});
      return out;
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const GridPeak& a, const GridPeak& b) { return a.t < b.t; });
    double last_t = -1.0;
    for (const GridPeak& peak : peaks) {
      if (peak.value < best - kMaximizerValueTolerance) continue;
      if (peak.t - last_t <= 1e-8) continue;
      last_t = peak.t;
      out.push_back({lp_duality_pair(p, peak.t), peak.value});
    }
    return out;
  }

  const auto& vs = norm.vertices();
  const auto& gs = norm.edge_functionals();
  const std::size_t m = vs.size();
  const Operator2x2& i4 = isometry_basis(4);
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 tx = i4.apply(vs[i]);
    best = std::max(best, std::fabs(dot(gs[(i + m - 1) % m], tx)));
    best = std::max(best, std::fabs(dot(gs[i], tx)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 tx = i4.apply(vs[i]);
    for (Vec2 g : {gs[(i + m - 1) % m], gs[i]}) {
      double v = std::fabs(dot(g, tx));
      if (v >= best - kMaximizerValueTolerance) out.push_back({{vs[i], g}, v});
    }
  }
  return out;
}

RadiusAttainment radius_i4_maximizer(const Norm& norm) {
  return radius_i4_maximizers(norm).front();
}

ContactVector contact_vector(const DualityPair& pair) {
  if (!is_finite(pair.x) || !is_finite(pair.xstar)) {
    throw InvalidInputError("contact_vector: pair entries must be finite");
  }
  if (std::fabs(dot(pair.xstar, pair.x) - 1.0) > kPairTolerance) {
    throw PreconditionError("contact_vector: pairing xstar(x) must equal 1");
  }
  ContactVector c;
  c.c1 = std::fabs(dot(pair.xstar, pair.x));
  c.c2 = std::fabs(dot(pair.xstar, isometry_basis(2).apply(pair.x)));
  c.c3 = std::fabs(dot(pair.xstar, isometry_basis(3).apply(pair.x)));
  c.c4 = std::fabs(dot(pair.xstar, isometry_basis(4).apply(pair.x)));
  if (c.c4 > std::min({c.c1, c.c2, c.c3}) + kContactOrderTolerance) {
    throw InconsistencyError(
        "contact_vector: c4 exceeds min(c1, c2, c3); the pair cannot come from "
        "an absolute symmetric norm");
  }
  return c;
}

IndexBound contact_index_bound(const ContactVector& contact) {
  check_contact(contact, "contact_index_bound");
  IndexBound bound;
  if (contact.c4 == 0.0) {
    bound.condition_value = 0.0;
    bound.lower_bound = 0.0;
    bound.exact = true;
    bound.certified = 0.0;
    return bound;
  }
  if (contact.c2 == 0.0 || contact.c3 == 0.0) {
    throw InconsistencyError(
        "contact_index_bound: c4 > 0 with c2 = 0 or c3 = 0 is impossible for a "
        "valid duality pair");
  }
  bound.condition_value = contact.c4 * (1.0 + 1.0 / contact.c2 + 1.0 / contact.c3);
  bound.lower_bound =
      std::min(contact.c4, 2.0 / (1.0 + 1.0 / contact.c2 + 1.0 / contact.c3 + 1.0 / contact.c4));
  bound.exact = bound.condition_value <= 1.0 + kExactnessTolerance;
  if (bound.exact) bound.certified = contact.c4;
  return bound;
}

double minimax_simplex(const ContactVector& contact) {
  check_contact(contact, "minimax_simplex");
  if (contact.c1 <= 0.0 || contact.c2 <= 0.0 || contact.c3 <= 0.0 || contact.c4 <= 0.0) {
    throw InvalidInputError("minimax_simplex: the closed form requires every c_j > 0");
  }
  return std::min(contact.c4,
                  2.0 / (1.0 + 1.0 / contact.c2 + 1.0 / contact.c3 + 1.0 / contact.c4));
}

IndexReport index_report(const Norm& norm) {
  ValidationReport vr = validate(norm);
  if (!vr.ok) {
    throw InvalidDescriptorError("index_report: " + norm.describe() + " fails " + vr.property);
  }

  std::vector<RadiusAttainment> maximizers = radius_i4_maximizers(norm);
  double radius = 0.0;
  for (const RadiusAttainment& m : maximizers) radius = std::max(radius, m.value);

  // The bound from any maximizing pair is valid; prefer one that certifies.
  ContactVector picked_contact = contact_vector(maximizers.front().pair);
  IndexBound picked = contact_index_bound(picked_contact);
  const DualityPair* picked_pair = &maximizers.front().pair;
  if (!picked.exact) {
    for (std::size_t i = 1; i < maximizers.size(); ++i) {
      ContactVector c = contact_vector(maximizers[i].pair);
      IndexBound b = contact_index_bound(c);
      if (b.exact) {
        picked_contact = c;
        picked = b;
        picked_pair = &maximizers[i].pair;
        break;
      }
    }
  }

  IndexReport report;
  report.radius_i4 = radius;
  report.maximizer = *picked_pair;
  report.contact = picked_contact;
  report.condition_value = picked.condition_value;
  report.lower_bound = picked.lower_bound;
  report.exact = picked.exact;
  if (picked.exact) {
    report.certified_index = radius;
  } else if (norm.family() == NormFamily::kLp && norm.exponent() >= 1.5 &&
             norm.exponent() <= 3.0) {
    report.certified_index = certified_index_lp(norm.exponent());
  }
  return report;
}

ConditionCheck lp_condition_check(double p, long grid_size) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw InvalidInputError("lp_condition_check requires a finite exponent with 1 < p");
  }
  if (grid_size < 2) throw InvalidInputError("lp_condition_check requires grid_size >= 2");
  const double e1 = 2.0 * p - 3.0;
  const double e2 = 2.0 * p - 1.0;
  ConditionCheck check;
  check.min_value = std::numeric_limits<double>::infinity();
  for (long i = 1; i < grid_size; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(grid_size);
    double h = t * (1.0 - std::pow(t, e1)) + t * t * (1.0 - std::pow(t, e2));
    if (h < check.min_value) {
      check.min_value = h;
      check.argmin_t = t;
    }
  }
  check.holds = check.min_value >= -1e-12;
  return check;
}

double certified_index_lp(double p) {
  if (!std::isfinite(p) || p < 1.5 || p > 3.0) {
    throw CertificationRangeError("certified_index_lp covers only p in [3/2, 3]");
  }
  if (p == 2.0) return 0.0;
  if (p > 2.0) return certified_index_lp(conjugate_exponent(p));
  ConditionCheck check = lp_condition_check(p);
  if (!check.holds) {
    throw InconsistencyError("certified_index_lp: exactness condition failed inside [3/2, 2)");
  }
  return mp_constant(p).value;
}

}  // namespace nidx
