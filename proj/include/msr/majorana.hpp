// majorana.hpp
// Conversion between an n-level pure state and its constellation of n-1
// Bloch-sphere stars, via the Majorana polynomial
//
//   prod_k (alpha_k x - beta_k) = sum_r f_r x^{n-1-r},
//   f_r = (-1)^r c_r / sqrt(r! (n-1-r)!).
//
// A finite root x maps to the star (1, x)/sqrt(1+|x|^2); every vanishing
// leading coefficient contributes one root at infinity, i.e. a south-pole
// star, so the constellation size is always n-1.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "msr/assignment.hpp"
#include "msr/statespace.hpp"

namespace msr {

/// Coefficients f_0..f_{n-1}; coeffs(r) multiplies x^{n-1-r}.
struct MajoranaPolynomial {
  Eigen::Index dim = 0;
  Eigen::VectorXcd coeffs;
};

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline MajoranaPolynomial build_polynomial(const PureState& psi) {
  const int n = static_cast<int>(psi.dim());
  MajoranaPolynomial poly;
  poly.dim = n;
  poly.coeffs.resize(n);
  for (int r = 0; r < n; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    poly.coeffs(r) = sign * psi.coeff(r) / std::sqrt(factorial(r) * factorial(n - 1 - r));
  }
  return poly;
}

namespace detail {

// Horner evaluation of p and p' for coefficients in descending-degree order.
inline std::pair<Complex, Complex> horner(const Eigen::VectorXcd& c, Complex x) {
  Complex p = c(0);
  Complex dp = 0.0;
  for (Eigen::Index i = 1; i < c.size(); ++i) {
    dp = dp * x + p;
    p = p * x + c(i);
  }
  return {p, dp};
}

// Roots of a general complex polynomial (descending-degree coefficients)
// via companion-matrix eigenvalues followed by Newton polishing. Steps are
// accepted only while |p| decreases, which leaves clustered roots at the
// companion estimate instead of bouncing them around.
inline std::vector<Complex> polynomial_roots(const Eigen::VectorXcd& coeffs) {
  const Eigen::Index deg = coeffs.size() - 1;
  if (deg < 1) return {};
  if (deg == 1) return {-coeffs(1) / coeffs(0)};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -coeffs(deg - i) / coeffs(0);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("polynomial_roots: eigensolver failed");
  }

  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + deg);
  for (Complex& root : roots) {
    Complex x = root;
    double best = std::abs(horner(coeffs, x).first);
    for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
      const auto [p, dp] = horner(coeffs, x);
      if (std::abs(dp) == 0.0) break;
      const Complex next = x - p / dp;
      const double val = std::abs(horner(coeffs, next).first);
      if (!(val < best)) break;
      x = next;
      best = val;
    }
    root = x;
  }
  return roots;
}

// Multiplicity-aware cleanup. An m-fold root perturbed at machine level
// splits into a cluster of radius ~eps^(1/m); the cluster centroid is
// accurate to ~eps because the symmetric functions are well conditioned.
// Clusters are merged at a size-dependent radius and the snapped
// constellation is accepted only if it still reconstructs the input state.
inline const double* cluster_radius_table() {
  static const double table[] = {0.0, 0.0,
                                 std::pow(1e-12, 1.0 / 2.0), std::pow(1e-12, 1.0 / 3.0),
                                 std::pow(1e-12, 1.0 / 4.0), std::pow(1e-12, 1.0 / 5.0),
                                 std::pow(1e-12, 1.0 / 6.0), std::pow(1e-12, 1.0 / 7.0),
                                 std::pow(1e-12, 1.0 / 8.0), std::pow(1e-12, 1.0 / 9.0)};
  return table;
}

inline double cluster_radius(std::size_t k) {
  if (k < 2) return 0.0;
  if (k <= 9) return cluster_radius_table()[k];
  return std::pow(1e-12, 1.0 / static_cast<double>(k));
}

struct BlochCluster {
  Vec3 sum = Vec3::Zero();
  std::vector<int> members;
  Vec3 centroid() const { return (sum / static_cast<double>(members.size())).normalized(); }
};

inline std::vector<BlochCluster> cluster_stars(const std::vector<Star>& stars) {
  std::vector<BlochCluster> clusters;
  clusters.reserve(stars.size());
  for (std::size_t i = 0; i < stars.size(); ++i) {
    BlochCluster c;
    c.sum = stars[i].bloch();
    c.members = {static_cast<int>(i)};
    clusters.push_back(std::move(c));
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < clusters.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j) {
        const std::size_t k = clusters[i].members.size() + clusters[j].members.size();
        if ((clusters[i].centroid() - clusters[j].centroid()).norm() <= cluster_radius(k)) {
          clusters[i].sum += clusters[j].sum;
          clusters[i].members.insert(clusters[i].members.end(),
                                     clusters[j].members.begin(), clusters[j].members.end());
          clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  return clusters;
}

}  // namespace detail

PureState reconstruct(const Constellation& constellation);

/// Solve the Majorana polynomial of psi and return its n-1 stars.
inline Constellation decompose(const PureState& psi) {
  const Eigen::Index n = psi.dim();
  const MajoranaPolynomial poly = build_polynomial(psi);
  const double scale = poly.coeffs.cwiseAbs().maxCoeff();
  if (scale == 0.0) {
    throw std::invalid_argument("decompose: zero polynomial");
  }
  const double zero_tol = 1e-13 * scale;

  Eigen::Index lead = 0;
  while (lead < n && std::abs(poly.coeffs(lead)) <= zero_tol) ++lead;
  Eigen::Index trail = n - 1;
  while (trail > lead && std::abs(poly.coeffs(trail)) <= zero_tol) --trail;

  std::vector<Star> stars;
  stars.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < lead; ++i) stars.push_back(Star::south_pole());
  for (Eigen::Index i = trail; i < n - 1; ++i) stars.push_back(Star::north_pole());

  const Eigen::Index deg = trail - lead;
  if (deg > 0) {
    const Eigen::VectorXcd reduced = poly.coeffs.segment(lead, deg + 1);
    for (const Complex& root : detail::polynomial_roots(reduced)) {
      stars.push_back(Star::from_root(root));
    }
  }

  Constellation raw(n, stars);
  const auto clusters = detail::cluster_stars(raw.stars());
  if (clusters.size() == raw.stars().size()) return raw;

  std::vector<Star> snapped(raw.stars().size(), Star::north_pole());
  for (const auto& cluster : clusters) {
    const Star s = Star::from_bloch(cluster.centroid());
    for (int idx : cluster.members) snapped[static_cast<std::size_t>(idx)] = s;
  }
  Constellation candidate(n, std::move(snapped));
  if (fidelity(psi, reconstruct(candidate)) >= 1.0 - 1e-11) return candidate;
  return raw;
}

/// Expand prod_k (alpha_k x - beta_k), invert the coefficient map and
/// normalize. Up to global phase this inverts decompose.
inline PureState reconstruct(const Constellation& constellation) {
  const Eigen::Index n = constellation.dim();
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
  f(0) = 1.0;
  Eigen::Index deg = 0;
  for (const Star& star : constellation.stars()) {
    ++deg;
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index r = 0; r <= deg; ++r) {
      Complex value = 0.0;
      if (r < deg) value += star.alpha() * f(r);
      if (r > 0) value -= star.beta() * f(r - 1);
      next(r) = value;
    }
    f = next;
  }

  Eigen::VectorXcd c(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    c(r) = sign * f(r) * std::sqrt(factorial(static_cast<int>(r)) *
                                   factorial(static_cast<int>(n - 1 - r)));
  }
  const double norm = c.norm();
  if (norm == 0.0) {
    throw std::runtime_error("reconstruct: constellation expands to the zero vector");
  }
  return PureState(c / norm);
}

/// Optimal-assignment Bloch distance between equal-size constellations:
/// the max single-star displacement under the best pairing.
inline double constellation_distance(const Constellation& a, const Constellation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("constellation_distance: size mismatch");
  }
  const Eigen::Index k = a.size();
  Eigen::MatrixXd cost(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      cost(i, j) = (a.stars()[static_cast<std::size_t>(i)].bloch() -
                    b.stars()[static_cast<std::size_t>(j)].bloch()).norm();
    }
  }
  const std::vector<int> perm = min_cost_assignment(cost);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    worst = std::max(worst, cost(i, perm[static_cast<std::size_t>(i)]));
  }
  return worst;
}

/// Star multiplicities at the given Bloch-distance tolerance, largest
/// cluster first. Reporting only; decompose keeps all dim-1 stars.
inline std::vector<std::pair<Star, int>> star_multiplicities(const Constellation& c,
                                                             double tol = 2e-7) {
  std::vector<std::pair<Star, int>> groups;
  std::vector<char> taken(c.stars().size(), false);
  for (std::size_t i = 0; i < c.stars().size(); ++i) {
    if (taken[i]) continue;
    Vec3 sum = c.stars()[i].bloch();
    int count = 1;
    taken[i] = true;
    for (std::size_t j = i + 1; j < c.stars().size(); ++j) {
      if (!taken[j] && (c.stars()[i].bloch() - c.stars()[j].bloch()).norm() <= tol) {
        sum += c.stars()[j].bloch();
        ++count;
        taken[j] = true;
      }
    }
    groups.emplace_back(Star::from_bloch((sum / count).normalized()), count);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  return groups;
}

}  // namespace msr
