#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "nidx/errors.hpp"
#include "nidx/index.hpp"

namespace nidx {
namespace {

// The polytope K' lives in R^5 with coordinates w = (alpha_1..alpha_4, z).
// One equality (sum alpha = 1) plus nine inequalities a.w >= b.
constexpr int kDim = 5;
constexpr int kInequalities = 9;
constexpr double kSingularTolerance = 1e-12;
constexpr double kFeasibilitySlack = 1e-9;
constexpr double kVertexMergeTolerance = 1e-9;

using Row = std::array<double, kDim>;

struct Inequality {
  Row a;
  double b;
};

// Gaussian elimination with partial pivoting; false when a pivot falls below
// kSingularTolerance, flagging the subsystem as degenerate.
bool solve(std::array<Row, kDim> m, std::array<double, kDim> rhs, std::array<double, kDim>& w) {
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (std::fabs(m[pivot][col]) < kSingularTolerance) return false;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < kDim; ++r) {
      double factor = m[r][col] / m[col][col];
      for (int c = col; c < kDim; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (int r = kDim - 1; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < kDim; ++c) acc -= m[r][c] * w[c];
    w[r] = acc / m[r][r];
  }
  return true;
}

}  // namespace

double minimax_simplex_oracle(const ContactVector& contact) {
  const std::array<double, 4> c{contact.c1, contact.c2, contact.c3, contact.c4};
  for (double v : c) {
    if (!std::isfinite(v) || v < 0.0 || v > 2.0) {
      throw InvalidInputError("minimax_simplex_oracle requires contact coefficients in [0, 2]");
    }
  }

  std::array<Inequality, kInequalities> ineqs{};
  // z >= sum_{k != j} alpha_k c_k - alpha_j c_j, rewritten as
  // alpha_j c_j - sum_{k != j} alpha_k c_k + z >= 0.
  for (int j = 0; j < 4; ++j) {
    Inequality q{};
    for (int k = 0; k < 4; ++k) q.a[k] = (k == j) ? c[k] : -c[k];
    q.a[4] = 1.0;
    q.b = 0.0;
    ineqs[static_cast<std::size_t>(j)] = q;
  }
  // alpha_j >= 0.
  for (int j = 0; j < 4; ++j) {
    Inequality q{};
    q.a[static_cast<std::size_t>(j)] = 1.0;
    q.b = 0.0;
    ineqs[static_cast<std::size_t>(4 + j)] = q;
  }
  // z <= 2.
  ineqs[8].a = {0.0, 0.0, 0.0, 0.0, -1.0};
  ineqs[8].b = -2.0;

  const Row equality{1.0, 1.0, 1.0, 1.0, 0.0};

  std::vector<std::array<double, kDim>> vertices;
  double best = std::numeric_limits<double>::infinity();

  // Every vertex activates the equality plus at least four inequalities;
  // enumerate all C(9, 4) = 126 subsystems.
  for (int i1 = 0; i1 < kInequalities; ++i1) {
    for (int i2 = i1 + 1; i2 < kInequalities; ++i2) {
      for (int i3 = i2 + 1; i3 < kInequalities; ++i3) {
        for (int i4 = i3 + 1; i4 < kInequalities; ++i4) {
          std::array<Row, kDim> m{equality, ineqs[static_cast<std::size_t>(i1)].a,
                                  ineqs[static_cast<std::size_t>(i2)].a,
                                  ineqs[static_cast<std::size_t>(i3)].a,
                                  ineqs[static_cast<std::size_t>(i4)].a};
          std::array<double, kDim> rhs{1.0, ineqs[static_cast<std::size_t>(i1)].b,
                                       ineqs[static_cast<std::size_t>(i2)].b,
                                       ineqs[static_cast<std::size_t>(i3)].b,
                                       ineqs[static_cast<std::size_t>(i4)].b};
          std::array<double, kDim> w{};
          if (!solve(m, rhs, w)) continue;

          bool feasible = true;
          for (const Inequality& q : ineqs) {
            double lhs = 0.0;
            for (int k = 0; k < kDim; ++k) lhs += q.a[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)];
            if (lhs < q.b - kFeasibilitySlack) {
              feasible = false;
              break;
            }
          }
          if (!feasible) continue;

          bool duplicate = false;
          for (const auto& seen : vertices) {
            double dist = 0.0;
            for (int k = 0; k < kDim; ++k) {
              dist = std::max(dist, std::fabs(seen[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(k)]));
            }
            if (dist <= kVertexMergeTolerance) {
              duplicate = true;
              break;
            }
          }
          if (duplicate) continue;

          vertices.push_back(w);
          best = std::min(best, w[4]);
        }
      }
    }
  }

  if (vertices.empty()) {
    throw InconsistencyError("minimax_simplex_oracle: the constraint polytope has no vertices");
  }
  return best;
}

}  // namespace nidx
