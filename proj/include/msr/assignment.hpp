// assignment.hpp
// Minimum-cost perfect assignment on a square cost matrix (Hungarian
// algorithm with potentials, O(k^3)). Used for continuity matching of
// star tracks and for multiset distance between constellations.

#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <vector>

namespace msr {

/// Returns perm with perm[row] = assigned column, minimizing total cost.
inline std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) {
    throw std::invalid_argument("min_cost_assignment: cost matrix must be square");
  }
  const int n = static_cast<int>(cost.rows());
  if (n == 0) return {};

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; p[j] = row matched to column j, column 0 is virtual.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> result(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) result[p[j] - 1] = j - 1;
  }
  return result;
}

/// Total cost of the optimal assignment.
inline double min_cost_assignment_cost(const Eigen::MatrixXd& cost) {
  const std::vector<int> perm = min_cost_assignment(cost);
  double total = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    total += cost(static_cast<Eigen::Index>(i), perm[i]);
  }
  return total;
}

}  // namespace msr
