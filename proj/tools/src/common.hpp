#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "nidx/norm.hpp"
#include "nidx/operators.hpp"

namespace nidxcli {

// All emitted numbers carry 12 significant digits. JSON values are quantized
// through the same textual form so that parse(emit(x)) == x bit-for-bit.
inline std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

inline double quantize12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

// Deterministic RNG for the verify suites (fixed seeds, no platform variance).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct CliError {
  std::string message;
};

// Parses {"family":"lp","p":...} / {"family":"polyhedral","firstQuadrantVertices":[[x,y],...]}.
// `echo` receives the canonical descriptor for report output.
nidx::Norm parse_norm_spec(const std::string& text, nlohmann::json& echo);

// Parses the operator literal "t11,t12,t21,t22".
nidx::Operator2x2 parse_operator(const std::string& text);

}  // namespace nidxcli
