#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "nidx/errors.hpp"
#include "nidx/norm.hpp"
#include "nidx/operators.hpp"
#include "nidx/radius.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace nidx;

namespace {

Norm ell1() { return Norm::polyhedral({{1.0, 0.0}}); }
Norm octagon() { return Norm::polyhedral({{1.0, 0.0}, {std::sqrt(0.5), std::sqrt(0.5)}}); }

Operator2x2 random_operator(testsupport::SplitMix64& rng, double scale) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
          rng.uniform(-scale, scale)};
}

}  // namespace

TEST_CASE("operator norms of simple matrices") {
  CHECK(std::fabs(operator_norm(Norm::lp(2.0), isometry_basis(1)) - 1.0) <= 1e-10);
  CHECK(std::fabs(operator_norm(Norm::lp(1.7), {2.0, 0.0, 0.0, 0.0}) - 2.0) <= 1e-10);
  CHECK(std::fabs(operator_norm(ell1(), {1.0, 1.0, 1.0, 1.0}) - 2.0) <= 1e-12);
  // isometries have norm one on every absolute symmetric norm
  for (const Norm& n : {Norm::lp(1.5), Norm::lp(3.0), ell1(), octagon()}) {
    for (int j = 1; j <= 4; ++j) {
      CHECK(std::fabs(operator_norm(n, isometry_basis(j)) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("numerical radii of the isometries") {
  // on l2 the skew isometry I4 has numerical radius zero
  CHECK(numerical_radius(Norm::lp(2.0), isometry_basis(4)) <= 1e-10);
  // on l1 it reaches the full norm
  CHECK(std::fabs(numerical_radius(ell1(), isometry_basis(4)) - 1.0) <= 1e-12);
  // I1, I2, I3 always have radius one: they fix a sphere point together
  // with one of its norming functionals
  for (const Norm& n : {Norm::lp(1.5), Norm::lp(2.0), Norm::lp(3.0), ell1(), octagon()}) {
    for (int j = 1; j <= 3; ++j) {
      CHECK(std::fabs(numerical_radius(n, isometry_basis(j)) - 1.0) <= 1e-10);
    }
  }
  // on l3 the radius of I4 matches the independent grid maximization
  double oracle = testsupport::m3_grid_oracle();
  CHECK(std::fabs(numerical_radius(Norm::lp(3.0), isometry_basis(4)) - oracle) <= 1e-8);
}

TEST_CASE("numerical range values at a sphere point") {
  std::vector<double> at = numerical_range_values(Norm::lp(2.0), isometry_basis(4), 0.7);
  REQUIRE(at.size() == 1);
  CHECK(std::fabs(at[0]) <= 1e-12);

  std::vector<double> id = numerical_range_values(Norm::lp(2.0), isometry_basis(1), 1.3);
  REQUIRE(id.size() == 1);
  CHECK(std::fabs(id[0] - 1.0) <= 1e-12);

  // at the l1 vertex (1,0) the two edge functionals see I4 x = (0,-1) with
  // opposite signs
  std::vector<double> corner = numerical_range_values(ell1(), isometry_basis(4), 0.0);
  REQUIRE(corner.size() == 2);
  std::sort(corner.begin(), corner.end());
  CHECK(std::fabs(corner[0] + 1.0) <= 1e-12);
  CHECK(std::fabs(corner[1] - 1.0) <= 1e-12);

  CHECK_THROWS_AS(numerical_range_values(ell1(), isometry_basis(4), std::nan("")),
                  InvalidInputError);
}

TEST_CASE("radius is bounded by the norm and behaves homogeneously") {
  testsupport::SplitMix64 rng(0x726164697573ull);
  std::vector<Norm> norms;
  norms.push_back(Norm::lp(1.5));
  norms.push_back(Norm::lp(2.0));
  norms.push_back(Norm::lp(3.5));
  norms.push_back(ell1());
  norms.push_back(octagon());
  norms.push_back(testsupport::random_polyhedral_norm(rng));

  for (const Norm& n : norms) {
    RadiusEngine engine(n);
    for (int i = 0; i < 25; ++i) {
      Operator2x2 t = random_operator(rng, 3.0);
      double v = engine.numerical_radius(t);
      double norm = engine.operator_norm(t);
      CHECK(v <= norm + 1e-9);
      CHECK(v >= 0.0);

      double s = rng.uniform(-2.0, 2.0);
      CHECK(std::fabs(engine.numerical_radius(s * t) - std::fabs(s) * v) <=
            1e-10 * std::max(1.0, std::fabs(s)));
    }
  }
}

TEST_CASE("radius is invariant under isometry conjugation") {
  testsupport::SplitMix64 rng(0x636f6e6a72ull);
  for (const Norm& n : {Norm::lp(1.5), Norm::lp(2.5), ell1(), octagon()}) {
    RadiusEngine engine(n);
    for (int i = 0; i < 10; ++i) {
      Operator2x2 t = random_operator(rng, 2.0);
      double v = engine.numerical_radius(t);
      for (int j = 1; j <= 4; ++j) {
        for (int sign : {1, -1}) {
          double w = engine.numerical_radius(conjugate_by_isometry(t, j, sign));
          CHECK(std::fabs(w - v) <= 1e-8 * std::max(1.0, v));
        }
      }
    }
  }
}

TEST_CASE("exact polyhedral paths match the generic angular scan") {
  testsupport::SplitMix64 rng(0x67726964ull);
  std::vector<Norm> norms;
  norms.push_back(ell1());
  norms.push_back(octagon());
  norms.push_back(testsupport::random_polyhedral_norm(rng));

  for (const Norm& n : norms) {
    RadiusEngine engine(n);
    std::vector<Operator2x2> ops;
    ops.push_back(isometry_basis(4));
    for (int i = 0; i < 8; ++i) ops.push_back(random_operator(rng, 2.0));
    for (const Operator2x2& t : ops) {
      double exact_v = engine.numerical_radius(t);
      double exact_n = engine.operator_norm(t);
      CHECK(std::fabs(engine.grid_numerical_radius(t) - exact_v) <=
            1e-6 * std::max(1.0, exact_v));
      CHECK(std::fabs(engine.grid_operator_norm(t) - exact_n) <= 1e-6 * std::max(1.0, exact_n));
    }
  }
}

TEST_CASE("engine rejects bad inputs") {
  CHECK_THROWS_AS(RadiusEngine(Norm::lp(2.0), GridOptions{4, 60, 8}), InvalidInputError);
  RadiusEngine engine(Norm::lp(2.0));
  CHECK_THROWS_AS(engine.numerical_radius({std::nan(""), 0.0, 0.0, 0.0}), InvalidInputError);
  CHECK_THROWS_AS(engine.operator_norm({0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0}),
                  InvalidInputError);
}
