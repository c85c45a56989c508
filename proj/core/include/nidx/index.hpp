#pragma once

#include <optional>
#include <vector>

#include "nidx/norm.hpp"
#include "nidx/operators.hpp"
#include "nidx/radius.hpp"

namespace nidx {

/// Contact coefficients of a duality pair (x, xstar):  c_j = |xstar(I_j x)|.
/// For any valid pair c1 = 1 and c4 <= min(c1, c2, c3) + 1e-10; the ordering
/// holds because each of I1 x, I2 x, I3 x differs from I4 x by a sign pattern
/// that an absolute norm cannot distinguish, while xstar attains its norm at x.
struct ContactVector {
  double c1 = 1.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

/// Lower bound on the numerical index derived from the contact coefficients
/// of a radius-attaining pair of I4:
///   c4 = 0                    ->  the index is exactly 0;
///   otherwise                 ->  index >= min{c4, 2/(1 + 1/c2 + 1/c3 + 1/c4)};
///   c4*(1 + 1/c2 + 1/c3) <= 1 ->  the bound is tight and index = v(I4) = c4.
struct IndexBound {
  double condition_value = 0.0;  // c4*(1 + 1/c2 + 1/c3); 0 when c4 = 0
  double lower_bound = 0.0;
  bool exact = false;
  std::optional<double> certified;  // set when exact: the index itself (= c4)
};

/// A duality pair attaining the numerical radius of I4, with the value.
struct RadiusAttainment {
  DualityPair pair;
  double value = 0.0;
};

/// Full per-norm report, composed as: maximizer of v(I4) -> contact vector ->
/// index bound. When several maximizing pairs are found (values within 1e-9
/// of the best), the exactness condition is evaluated at each of them and the
/// first pair that certifies is the one reported.
struct IndexReport {
  double radius_i4 = 0.0;
  DualityPair maximizer;
  ContactVector contact;
  double condition_value = 0.0;
  double lower_bound = 0.0;
  bool exact = false;
  std::optional<double> certified_index;
};

/// Result of the brute-force index search: min of v(T)/||T|| over a grid of
/// coefficient directions, locally refined by pattern search.
struct IndexEstimate {
  double value = 1.0;
  Operator2x2 argmin;
  int grid_resolution = 0;
  bool refined = false;
};

struct MpResult {
  double value = 0.0;
  double t0 = 0.0;  // maximizing parameter; ties resolved to the smallest t
};

/// Result of the pointwise exactness-condition scan for an lp norm.
struct ConditionCheck {
  bool holds = false;
  double min_value = 0.0;
  double argmin_t = 0.0;
};

/// The radius constant of the lp norm:
///   M_p = max over t in [0, 1] of |t^(p-1) - t| / (1 + t^p),
/// which equals the numerical radius of I4 on lp. Computed on a 10^4-interval
/// grid with golden-section refinement; absolute tolerance 1e-12. The map
/// p -> M_p is invariant under p -> p/(p-1).
MpResult mp_constant(double p);

/// q = p/(p-1) for finite p > 1.
double conjugate_exponent(double p);

/// Duality pairs attaining v(I4). The lp route maximizes |xstar_t(I4 x_t)|
/// over the parametrization of lp_duality_pair; the polyhedral route
/// enumerates (vertex, edge functional) pairs exactly. All pairs whose value
/// lies within 1e-9 of the best are returned, best tie-break first.
std::vector<RadiusAttainment> radius_i4_maximizers(const Norm& norm);
RadiusAttainment radius_i4_maximizer(const Norm& norm);

/// Contact coefficients of a pair. Verifies the pairing normalization within
/// kPairTolerance and the ordering c4 <= min(c1, c2, c3) + 1e-10.
ContactVector contact_vector(const DualityPair& pair);

/// The index bound described at IndexBound. Requires a contact vector with
/// c1 = 1 within 1e-9; rejects c4 > 0 with c2 = 0 or c3 = 0, which no valid
/// duality pair can produce.
IndexBound contact_index_bound(const ContactVector& contact);

/// min over the probability simplex of
///   f(alpha) = max_j ( sum_{k != j} alpha_k c_k - alpha_j c_j ),
/// via the closed form min{c4, 2/(1 + 1/c2 + 1/c3 + 1/c4)}. The minimum is
/// attained either at the face point alpha = e4 (value c4) or at the interior
/// point where all alpha_j c_j coincide (value 2/(1 + 1/c2 + 1/c3 + 1/c4)).
/// Requires every c_j > 0 in addition to the contact invariants.
double minimax_simplex(const ContactVector& contact);

/// The same minimum computed independently as a linear program over
///   K' = { (alpha, z) : alpha in simplex, z <= 2,
///          z >= sum_{k != j} alpha_k c_k - alpha_j c_j  for each j }:
/// every vertex of K' is enumerated by solving all 5x5 subsystems of active
/// constraints (singular subsystems within 1e-12 skipped, feasibility slack
/// 1e-9, duplicate vertices merged within 1e-9) and the smallest z value is
/// returned. Accepts any c_j in [0, 2].
double minimax_simplex_oracle(const ContactVector& contact);

/// Composes radius_i4_maximizers -> contact_vector -> contact_index_bound.
/// certified_index is set to radius_i4 when a maximizer certifies exactness,
/// and to the certified lp value for lp norms with p in [3/2, 3].
IndexReport index_report(const Norm& norm);

/// Scans h(t) = t*(1 - t^(2p-3)) + t^2*(1 - t^(2p-1)) on the interior grid
/// t = i/grid_size, 0 < i < grid_size. holds() means min h >= -1e-12, which
/// is equivalent to the exactness condition c4(t)*(1 + 1/c2(t) + 1/c3(t)) <= 1
/// holding along the whole lp duality parametrization.
ConditionCheck lp_condition_check(double p, long grid_size = 100000);

/// Certified numerical index of the lp norm for p in [3/2, 3]:
///   p = 2        -> 0;
///   p in [3/2,2) -> M_p after verifying lp_condition_check(p);
///   p in (2,3]   -> the q = p/(p-1) value, since conjugate norms share index.
/// Exponents outside [3/2, 3] raise CertificationRangeError; callers fall
/// back to index_report plus brute_force_index.
double certified_index_lp(double p);

/// Brute-force upper estimate of the numerical index: minimizes v(T)/||T||
/// over operators parametrized by coefficient directions on the sphere
/// sum |a_j| = 1. Since v(-T) = v(T) only half the sphere is scanned
/// (`resolution` steps per angular coordinate, resolution >= 8), with the four
/// coefficient axes seeded so the witness T = I4 is always considered; the
/// best cell is then refined by pattern search (step halving, 40 rounds).
/// The reported value is v/||.|| at the argmin under default GridOptions.
IndexEstimate brute_force_index(const Norm& norm, int resolution = 64);

}  // namespace nidx
