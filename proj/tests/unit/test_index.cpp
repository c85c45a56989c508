#include <cmath>
#include <vector>

#include "doctest.h"
#include "nidx/errors.hpp"
#include "nidx/index.hpp"
#include "nidx/norm.hpp"
#include "nidx/radius.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace nidx;

namespace {

Norm ell1() { return Norm::polyhedral({{1.0, 0.0}}); }

// closed-form contact coefficients along the lp duality parametrization
ContactVector lp_contact_reference(double p, double t) {
  double tp = std::pow(t, p);
  double tp1 = std::pow(t, p - 1.0);
  ContactVector c;
  c.c1 = 1.0;
  c.c2 = (1.0 - tp) / (1.0 + tp);
  c.c3 = (tp1 + t) / (1.0 + tp);
  c.c4 = std::fabs(tp1 - t) / (1.0 + tp);
  return c;
}

}  // namespace

TEST_CASE("the radius constant of lp") {
  MpResult two = mp_constant(2.0);
  CHECK(two.value == 0.0);
  CHECK(two.t0 == 0.0);

  MpResult three = mp_constant(3.0);
  CHECK(std::fabs(three.value - 0.2270833462108228) <= 1e-9);
  CHECK(std::fabs(three.t0 - 0.43542054468233904) <= 1e-6);

  CHECK(std::fabs(mp_constant(1.75).value - 0.09514498353366202) <= 1e-9);
  CHECK(std::fabs(mp_constant(2.5).value - 0.13384151194121538) <= 1e-9);

  // the map p -> M_p is conjugation invariant
  testsupport::SplitMix64 rng(0x6d70636f6e6aull);
  for (int i = 0; i < 40; ++i) {
    double p = 1.0 + std::exp(rng.uniform(std::log(0.01), std::log(19.0)));
    double q = conjugate_exponent(p);
    CHECK(std::fabs(mp_constant(p).value - mp_constant(q).value) <= 1e-10);
  }

  CHECK(std::fabs(conjugate_exponent(2.0) - 2.0) <= 1e-15);
  CHECK(std::fabs(conjugate_exponent(1.5) - 3.0) <= 1e-12);
  CHECK(std::fabs(conjugate_exponent(3.0) - 1.5) <= 1e-12);

  CHECK_THROWS_AS(mp_constant(1.0), InvalidInputError);
  CHECK_THROWS_AS(mp_constant(std::nan("")), InvalidInputError);
  CHECK_THROWS_AS(conjugate_exponent(1.0), InvalidInputError);
}

TEST_CASE("maximizing pairs of the skew isometry") {
  // p = 2: the range of I4 is identically zero; the canonical pair is t = 0
  std::vector<RadiusAttainment> two = radius_i4_maximizers(Norm::lp(2.0));
  REQUIRE(two.size() == 1);
  CHECK(two[0].value == 0.0);
  CHECK(two[0].pair.x == Vec2{1.0, 0.0});

  // p = 3: a single interior maximizer at the known parameter
  std::vector<RadiusAttainment> three = radius_i4_maximizers(Norm::lp(3.0));
  REQUIRE(three.size() >= 1);
  for (const RadiusAttainment& att : three) {
    CHECK(std::fabs(att.value - 0.2270833462108228) <= 1e-8);
    double t = att.pair.x.y / att.pair.x.x;
    CHECK(std::fabs(t - 0.43542054468233904) <= 1e-6);
  }

  // l1: the radius is one and every reported pair attains it
  Norm diamond = ell1();
  RadiusEngine engine(diamond);
  std::vector<RadiusAttainment> corners = radius_i4_maximizers(diamond);
  REQUIRE(!corners.empty());
  for (const RadiusAttainment& att : corners) {
    CHECK(std::fabs(att.value - 1.0) <= 1e-12);
    CHECK(std::fabs(dot(att.pair.xstar, att.pair.x) - 1.0) <= 1e-12);
    CHECK(std::fabs(std::fabs(dot(att.pair.xstar, isometry_basis(4).apply(att.pair.x))) - 1.0) <=
          1e-12);
  }
  CHECK(std::fabs(radius_i4_maximizer(diamond).value - 1.0) <= 1e-12);
}

TEST_CASE("contact vectors of duality pairs") {
  ContactVector axis = contact_vector({{1.0, 0.0}, {1.0, 0.0}});
  CHECK(axis.c1 == 1.0);
  CHECK(std::fabs(axis.c2 - 1.0) <= 1e-15);
  CHECK(std::fabs(axis.c3) <= 1e-15);
  CHECK(std::fabs(axis.c4) <= 1e-15);

  ContactVector diag = contact_vector(lp_duality_pair(2.0, 1.0));
  CHECK(std::fabs(diag.c2) <= 1e-15);
  CHECK(std::fabs(diag.c3 - 1.0) <= 1e-12);
  CHECK(std::fabs(diag.c4) <= 1e-15);

  for (double t : {0.1, 0.35, 0.5, 0.8}) {
    ContactVector got = contact_vector(lp_duality_pair(1.5, t));
    ContactVector want = lp_contact_reference(1.5, t);
    CHECK(std::fabs(got.c2 - want.c2) <= 1e-12);
    CHECK(std::fabs(got.c3 - want.c3) <= 1e-12);
    CHECK(std::fabs(got.c4 - want.c4) <= 1e-12);
  }

  CHECK_THROWS_AS(contact_vector({{1.0, 0.0}, {0.9, 0.0}}), PreconditionError);
  CHECK_THROWS_AS(contact_vector({{1.0, 0.0}, {1.0, 1.5}}), InconsistencyError);
  CHECK_THROWS_AS(contact_vector({{std::nan(""), 0.0}, {1.0, 0.0}}), InvalidInputError);
}

TEST_CASE("the contact lower bound and its exactness test") {
  IndexBound zero = contact_index_bound({1.0, 1.0, 0.0, 0.0});
  CHECK(zero.condition_value == 0.0);
  CHECK(zero.lower_bound == 0.0);
  CHECK(zero.exact);
  REQUIRE(zero.certified.has_value());
  CHECK(*zero.certified == 0.0);

  IndexBound loose = contact_index_bound({1.0, 0.5, 0.5, 0.25});
  CHECK(std::fabs(loose.condition_value - 1.25) <= 1e-12);
  CHECK(std::fabs(loose.lower_bound - 2.0 / 9.0) <= 1e-12);
  CHECK_FALSE(loose.exact);
  CHECK_FALSE(loose.certified.has_value());

  IndexBound tight = contact_index_bound({1.0, 0.9, 0.9, 0.2});
  CHECK(tight.condition_value <= 1.0);
  CHECK(tight.exact);
  REQUIRE(tight.certified.has_value());
  CHECK(std::fabs(*tight.certified - 0.2) <= 1e-15);
  // exactness means the interior point is no better than the c4 face
  CHECK(std::fabs(tight.lower_bound - 0.2) <= 1e-15);

  CHECK_THROWS_AS(contact_index_bound({1.0, 0.0, 0.5, 0.2}), PreconditionError);
  CHECK_THROWS_AS(contact_index_bound({0.9, 0.5, 0.5, 0.2}), PreconditionError);
  CHECK_THROWS_AS(contact_index_bound({1.0, -0.1, 0.5, 0.0}), InvalidInputError);
  // c4 > 0 with a vanishing c2 cannot come from a duality pair
  CHECK_THROWS_AS(contact_index_bound({1.0, 0.0, 0.5, 5e-11}), InconsistencyError);
}

TEST_CASE("per-norm index reports") {
  IndexReport two = index_report(Norm::lp(2.0));
  CHECK(two.radius_i4 == 0.0);
  CHECK(two.lower_bound == 0.0);
  CHECK(two.condition_value == 0.0);
  CHECK(two.exact);
  REQUIRE(two.certified_index.has_value());
  CHECK(*two.certified_index == 0.0);

  IndexReport fifteen = index_report(Norm::lp(1.5));
  CHECK(fifteen.exact);
  REQUIRE(fifteen.certified_index.has_value());
  CHECK(std::fabs(*fifteen.certified_index - mp_constant(1.5).value) <= 1e-9);
  CHECK(std::fabs(fifteen.contact.c4 - fifteen.radius_i4) <= 1e-10);

  IndexReport diamond = index_report(ell1());
  CHECK(std::fabs(diamond.radius_i4 - 1.0) <= 1e-12);
  CHECK(std::fabs(diamond.lower_bound - 0.5) <= 1e-12);
  CHECK(std::fabs(diamond.condition_value - 3.0) <= 1e-12);
  CHECK_FALSE(diamond.exact);
  CHECK_FALSE(diamond.certified_index.has_value());

  // p = 4 fails the exactness test at its maximizer and is outside the
  // certified exponent window
  IndexReport four = index_report(Norm::lp(4.0));
  CHECK(four.condition_value > 1.0);
  CHECK_FALSE(four.exact);
  CHECK_FALSE(four.certified_index.has_value());

  IndexReport twofive = index_report(Norm::lp(2.5));
  CHECK(twofive.exact);
  REQUIRE(twofive.certified_index.has_value());
  CHECK(std::fabs(*twofive.certified_index - 0.13384151194121538) <= 1e-9);

  // structural invariants across a mixed batch
  testsupport::SplitMix64 rng(0x7265706f727473ull);
  std::vector<Norm> norms;
  for (double p : {1.2, 1.5, 1.8, 2.6, 5.0}) norms.push_back(Norm::lp(p));
  norms.push_back(ell1());
  for (int i = 0; i < 4; ++i) norms.push_back(testsupport::random_polyhedral_norm(rng));
  for (const Norm& n : norms) {
    IndexReport r = index_report(n);
    CHECK(r.lower_bound <= r.radius_i4 + 1e-10);
    CHECK(r.lower_bound >= 0.0);
    CHECK(std::fabs(dot(r.maximizer.xstar, r.maximizer.x) - 1.0) <= 1e-9);
    if (r.exact) {
      REQUIRE(r.certified_index.has_value());
      CHECK(std::fabs(*r.certified_index - r.radius_i4) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(index_report(Norm::polyhedral({{2.0, 0.0}})), InvalidDescriptorError);
}

TEST_CASE("the pointwise exactness scan over lp parameters") {
  for (double p : {1.5, 1.7, 1.9, 1.99}) {
    ConditionCheck c = lp_condition_check(p);
    CHECK(c.holds);
    CHECK(c.min_value >= -1e-12);
  }
  for (double p : {1.1, 1.2, 1.3}) {
    ConditionCheck c = lp_condition_check(p);
    CHECK_FALSE(c.holds);
    CHECK(c.min_value < 0.0);
    CHECK(c.argmin_t > 0.0);
    CHECK(c.argmin_t < 1.0);
  }
  CHECK_THROWS_AS(lp_condition_check(1.0), InvalidInputError);
  CHECK_THROWS_AS(lp_condition_check(2.0, 1), InvalidInputError);
}

TEST_CASE("certified lp indices") {
  CHECK(certified_index_lp(2.0) == 0.0);
  CHECK(std::fabs(certified_index_lp(3.0) - testsupport::m3_grid_oracle()) <= 1e-9);
  CHECK(std::fabs(certified_index_lp(1.5) - certified_index_lp(3.0)) <= 1e-10);

  for (double p : {1.6, 2.0, 2.4, 2.8}) {
    double certified = certified_index_lp(p);
    double radius = numerical_radius(Norm::lp(p), isometry_basis(4));
    CHECK(std::fabs(certified - radius) <= 1e-8);
  }

  CHECK_THROWS_AS(certified_index_lp(1.4), CertificationRangeError);
  CHECK_THROWS_AS(certified_index_lp(3.2), CertificationRangeError);
  CHECK_THROWS_AS(certified_index_lp(std::nan("")), CertificationRangeError);
}
