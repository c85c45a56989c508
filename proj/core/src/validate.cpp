#include <cmath>
#include <cstdint>

#include "nidx/norm.hpp"

namespace nidx {
namespace {

// Deterministic sampler (splitmix64) so validation reports are reproducible
// across platforms and standard library versions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  double uniform(double lo, double hi) {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
  }

  Vec2 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::uint64_t state_;
};

constexpr int kSampleCount = 1000;
constexpr double kNormalizationTolerance = 1e-9;
constexpr double kPropertyTolerance = 1e-12;

ValidationReport fail(std::string property, Vec2 witness, std::string detail) {
  ValidationReport r;
  r.ok = false;
  r.property = std::move(property);
  r.witness = witness;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

ValidationReport validate(const Norm& norm) {
  if (std::fabs(norm.evaluate({1.0, 0.0}) - 1.0) > kNormalizationTolerance) {
    return fail("normalization", {1.0, 0.0}, "||(1,0)|| != 1");
  }
  if (std::fabs(norm.evaluate({0.0, 1.0}) - 1.0) > kNormalizationTolerance) {
    return fail("normalization", {0.0, 1.0}, "||(0,1)|| != 1");
  }

  Sampler rng(0x6e696478u);  // fixed seed: reports must be reproducible
  for (int i = 0; i < kSampleCount; ++i) {
    Vec2 v = rng.point(-2.0, 2.0);
    double n = norm.evaluate(v);
    if (std::fabs(norm.evaluate({std::fabs(v.x), std::fabs(v.y)}) - n) > kPropertyTolerance) {
      return fail("absoluteness", v, "||(|a|,|b|)|| != ||(a,b)||");
    }
    if (std::fabs(norm.evaluate({v.y, v.x}) - n) > kPropertyTolerance) {
      return fail("symmetry", v, "||(b,a)|| != ||(a,b)||");
    }
  }
  for (int i = 0; i < kSampleCount; ++i) {
    Vec2 a = rng.point(-2.0, 2.0);
    Vec2 b = rng.point(-2.0, 2.0);
    if (norm.evaluate(a + b) > norm.evaluate(a) + norm.evaluate(b) + kPropertyTolerance) {
      return fail("convexity", a, "triangle inequality fails");
    }
  }
  for (int i = 0; i < kSampleCount; ++i) {
    Vec2 a = rng.point(-2.0, 2.0);
    double s = rng.uniform(-3.0, 3.0);
    double lhs = norm.evaluate(s * a);
    double rhs = std::fabs(s) * norm.evaluate(a);
    if (std::fabs(lhs - rhs) > kPropertyTolerance * std::max(1.0, rhs)) {
      return fail("homogeneity", a, "||s*a|| != |s|*||a||");
    }
  }
  return {};
}

}  // namespace nidx
