#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "common.hpp"
#include "nidx/index.hpp"
#include "nidx/norm.hpp"
#include "nidx/radius.hpp"

namespace nidxcli {
namespace {

using nidx::ContactVector;
using nidx::Norm;

std::string describe_line(const std::string& label, double value) {
  return label + " = " + format12(value);
}

// 20 deterministic norms: 10 lp with exponents spread over (1, 8], 10
// polyhedral hulls of (1,0) plus random first-quadrant points (staying inside
// the sup-norm box keeps (1,0) on the boundary, so normalization holds).
std::vector<Norm> suite_norms(SplitMix64& rng) {
  std::vector<Norm> norms;
  for (int i = 0; i < 10; ++i) {
    norms.push_back(Norm::lp(1.05 + 7.0 * rng.uniform()));
  }
  for (int i = 0; i < 10; ++i) {
    std::vector<nidx::Vec2> pts{{1.0, 0.0}};
    int extra = 1 + static_cast<int>(rng.next() % 4);
    for (int k = 0; k < extra; ++k) {
      pts.push_back({rng.uniform(), rng.uniform()});
    }
    norms.push_back(Norm::polyhedral(pts));
  }
  return norms;
}

SuiteResult suite_lemma1() {
  SplitMix64 rng(0x6c656d6d6131ULL);
  std::vector<Norm> norms = suite_norms(rng);

  double worst_margin = -1.0;  // max over pairs of (c4 - min(c1,c2,c3))
  std::string worst_witness;
  long checked = 0;
  for (const Norm& norm : norms) {
    for (int i = 0; i < 500; ++i) {
      double theta = 2.0 * std::numbers::pi * rng.uniform();
      nidx::Vec2 x = norm.sphere_point(theta);
      nidx::SupportSet support = norm.supporting_functionals(x);
      nidx::Vec2 f = support.functionals[0];
      if (support.count == 2) {
        // Convex combinations of the face's extreme functionals are also
        // supporting; sample the whole face, not just its endpoints.
        double lambda = rng.uniform();
        nidx::Vec2 g = support.functionals[1];
        f = {lambda * f.x + (1.0 - lambda) * g.x, lambda * f.y + (1.0 - lambda) * g.y};
      }
      ContactVector c = nidx::contact_vector({x, f});
      double margin = c.c4 - std::min(c.c1, std::min(c.c2, c.c3));
      ++checked;
      if (margin > worst_margin) {
        worst_margin = margin;
        worst_witness = norm.describe() + " theta=" + format12(theta);
      }
    }
  }

  SuiteResult result;
  result.pass = worst_margin <= 1e-10;
  result.lines.push_back("pairs checked: " + std::to_string(checked));
  result.lines.push_back(describe_line("worst margin c4 - min(c1,c2,c3)", worst_margin));
  result.lines.push_back("worst witness: " + worst_witness);
  result.details["checked"] = checked;
  result.details["worstMargin"] = quantize12(worst_margin);
  result.details["worstWitness"] = worst_witness;
  return result;
}

SuiteResult suite_minimax() {
  SplitMix64 rng(0x6d696e696d6178ULL);
  double worst = 0.0;
  ContactVector worst_contact;
  for (int i = 0; i < 100; ++i) {
    ContactVector c;
    c.c2 = 0.05 + 0.95 * rng.uniform();
    c.c3 = 0.05 + 0.95 * rng.uniform();
    c.c4 = (0.05 + 0.95 * rng.uniform()) * std::min(c.c2, c.c3);
    double closed = nidx::minimax_simplex(c);
    double oracle = nidx::minimax_simplex_oracle(c);
    double diff = std::fabs(closed - oracle);
    if (diff > worst) {
      worst = diff;
      worst_contact = c;
    }
  }

  SuiteResult result;
  result.pass = worst <= 1e-9;
  result.lines.push_back("contact vectors checked: 100");
  result.lines.push_back(describe_line("worst |closed - oracle|", worst));
  result.lines.push_back("worst contact: c2=" + format12(worst_contact.c2) +
                         " c3=" + format12(worst_contact.c3) +
                         " c4=" + format12(worst_contact.c4));
  result.details["checked"] = 100;
  result.details["worstDiff"] = quantize12(worst);
  result.details["worstContact"] = {{"c2", quantize12(worst_contact.c2)},
                                    {"c3", quantize12(worst_contact.c3)},
                                    {"c4", quantize12(worst_contact.c4)}};
  return result;
}

SuiteResult suite_theorem3() {
  double worst = 0.0;
  double worst_p = 0.0;
  bool conditions_ok = true;
  for (int i = 0; i <= 15; ++i) {
    double p = static_cast<double>(15 + i) / 10.0;
    double certified = nidx::certified_index_lp(p);
    Norm norm = Norm::lp(p);
    double radius = nidx::numerical_radius(norm, nidx::isometry_basis(4));
    double diff = std::fabs(certified - radius);
    if (diff > worst) {
      worst = diff;
      worst_p = p;
    }
    double e = p < 2.0 ? p : nidx::conjugate_exponent(p);
    if (!nidx::lp_condition_check(e).holds) conditions_ok = false;
  }

  SuiteResult result;
  result.pass = worst <= 1e-8 && conditions_ok;
  result.lines.push_back("exponents checked: 16 (p = 1.5, 1.6, ..., 3.0)");
  result.lines.push_back(describe_line("worst |certified - radius|", worst) +
                         " at p = " + format12(worst_p));
  result.lines.push_back(std::string("condition check on [3/2,2): ") +
                         (conditions_ok ? "holds" : "VIOLATED"));
  result.details["checked"] = 16;
  result.details["worstDiff"] = quantize12(worst);
  result.details["worstP"] = quantize12(worst_p);
  result.details["conditionHolds"] = conditions_ok;
  return result;
}

SuiteResult suite_sandwich(int grid) {
  SuiteResult result;
  result.pass = true;
  result.details["rows"] = nlohmann::json::array();
  for (double p : {1.1, 1.25, 4.0, 8.0}) {
    double q = nidx::conjugate_exponent(p);
    double mp = nidx::mp_constant(p).value;
    double lower = std::max(std::pow(2.0, -1.0 / p), std::pow(2.0, -1.0 / q)) * mp;
    double brute = nidx::brute_force_index(Norm::lp(p), grid).value;
    bool ok = lower - 2e-3 <= brute && brute <= mp + 2e-3;
    result.pass = result.pass && ok;
    result.lines.push_back("p=" + format12(p) + ": " + format12(lower) + " - 2e-3 <= " +
                           format12(brute) + " <= " + format12(mp) + " + 2e-3 " +
                           (ok ? "(ok)" : "(FAIL)"));
    result.details["rows"].push_back({{"p", quantize12(p)},
                                      {"sandwichLower", quantize12(lower)},
                                      {"brute", quantize12(brute)},
                                      {"mp", quantize12(mp)},
                                      {"pass", ok}});
  }
  return result;
}

}  // namespace

SuiteResult run_verify_suite(const std::string& name, int grid) {
  if (name == "lemma1") return suite_lemma1();
  if (name == "minimax") return suite_minimax();
  if (name == "theorem3") return suite_theorem3();
  if (name == "sandwich") return suite_sandwich(grid);
  throw CliError{"unknown verify suite '" + name +
                 "' (expected lemma1, minimax, theorem3, or sandwich)"};
}

}  // namespace nidxcli
