// bargmann.hpp
// Bargmann invariants, geometric phase of discretized loops, and the
// null-phase-curve check: a curve is an NPC iff the third-order invariant
// Delta_3(Psi(s), Psi(s'), Psi(s'')) is real and strictly positive for
// every parameter triple.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

#include "msr/statespace.hpp"

namespace msr {

struct TripleBI {
  Complex value;
  double arg = 0.0;
  std::array<PureState, 3> states;
};

/// Third-order Bargmann invariant <p1|p2><p2|p3><p3|p1>.
inline TripleBI bi3(const PureState& p1, const PureState& p2, const PureState& p3) {
  const Complex o12 = inner(p1, p2);
  const Complex o23 = inner(p2, p3);
  const Complex o31 = inner(p3, p1);
  if (std::abs(o12) <= kInvariantTol || std::abs(o23) <= kInvariantTol ||
      std::abs(o31) <= kInvariantTol) {
    throw std::invalid_argument("bi3: an orthogonal pair makes the invariant undefined");
  }
  const Complex value = o12 * o23 * o31;
  return TripleBI{value, std::arg(value), {p1, p2, p3}};
}

/// n-th order invariant: the cyclic overlap product <P1|P2>...<Pn|P1>.
inline Complex bi_n(std::span<const PureState> states) {
  if (states.size() < 2) {
    throw std::invalid_argument("bi_n: need at least two states");
  }
  Complex product = 1.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Complex ov = inner(states[i], states[(i + 1) % states.size()]);
    if (std::abs(ov) <= kInvariantTol) {
      throw std::invalid_argument("bi_n: consecutive states are orthogonal");
    }
    product *= ov;
  }
  return product;
}

/// Geometric phase of the loop through the given states (closed by
/// geodesic chords): -arg of the cyclic Bargmann invariant.
inline double geometric_phase_closed(std::span<const PureState> states) {
  return -std::arg(bi_n(states));
}

struct NpcReport {
  bool pass = false;
  double max_abs_im = 0.0;
  double min_re = 0.0;
  int n_triples = 0;
  std::uint64_t seed = 0;
};

// Strict positivity threshold for Re Delta_3; the NPC condition is a
// strict inequality modulo rounding.
inline constexpr double kNpcPositivityFloor = 1e-12;
inline constexpr double kNpcImagTol = 1e-9;

/// Sample n_triples random grid triples (s, s', s'') of the curve and test
/// Delta_3 > 0 on each. Sampling is seeded and index-based so failures
/// reproduce exactly.
inline NpcReport verify_npc(const StateCurve& curve, int n_triples, std::uint64_t seed) {
  if (n_triples < 1) {
    throw std::invalid_argument("verify_npc: need at least one triple");
  }
  const std::size_t n = curve.size();
  if (n < 3) {
    throw std::invalid_argument("verify_npc: curve has fewer than three samples");
  }
  std::mt19937_64 rng(seed);
  const auto draw = [&rng, n]() { return static_cast<std::size_t>(rng() % n); };

  NpcReport report;
  report.n_triples = n_triples;
  report.seed = seed;
  report.min_re = std::numeric_limits<double>::infinity();
  for (int t = 0; t < n_triples; ++t) {
    std::size_t i = draw(), j = draw(), k = draw();
    while (j == i) j = draw();
    while (k == i || k == j) k = draw();
    const TripleBI bi = bi3(curve.states()[i], curve.states()[j], curve.states()[k]);
    report.max_abs_im = std::max(report.max_abs_im, std::abs(bi.value.imag()));
    report.min_re = std::min(report.min_re, bi.value.real());
  }
  report.pass = report.max_abs_im <= kNpcImagTol && report.min_re > kNpcPositivityFloor;
  return report;
}

}  // namespace msr
