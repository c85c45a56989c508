#pragma once

namespace nidx::detail {

template <class F>
struct GoldenPoint {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section maximization on [a, b]. Assumes the usable bracket came
/// from a grid local maximum; with a non-unimodal bracket it still returns a
/// point no worse than the interior probes. Ties prefer the smaller x.
template <class F>
auto golden_max(F&& f, double a, double b, int iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  struct Result {
    double x;
    double value;
  };
  return fc >= fd ? Result{c, fc} : Result{d, fd};
}

}  // namespace nidx::detail
