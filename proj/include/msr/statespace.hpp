// statespace.hpp
// Core state/qubit/Bloch types and the elementary operations every other
// module builds on: pure states of an n-level system, Majorana stars as
// projective qubit rays with their Bloch vectors, star multisets and
// parametrized state curves.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msr {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;

// Constructors renormalize inputs within this distance of unit norm and
// reject anything further out.
inline constexpr double kNormTol = 1e-9;

// Tolerance at which exact invariants (unitarity, norm preservation,
// conjugate symmetry) are asserted throughout the library and its tests.
inline constexpr double kInvariantTol = 1e-12;

/// Unit-norm complex amplitude vector of an n-level pure state, n >= 2.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
    if (amps_.size() < 2) {
      throw std::invalid_argument("PureState: dimension must be at least 2");
    }
    const double norm = amps_.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
      throw std::invalid_argument("PureState: amplitude norm deviates from 1 beyond tolerance");
    }
    amps_ /= norm;
  }

  static PureState basis(Eigen::Index dim, Eigen::Index r) {
    if (r < 0 || r >= dim) {
      throw std::out_of_range("PureState::basis: index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(r) = 1.0;
    return PureState(std::move(v));
  }

  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Complex coeff(Eigen::Index r) const { return amps_(r); }

 private:
  Eigen::VectorXcd amps_;
};

/// Hermitian inner product <a|b> = sum_r conj(a_r) b_r.
inline Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  return a.amps().dot(b.amps());
}

inline double fidelity(const PureState& a, const PureState& b) {
  return std::abs(inner(a, b));
}

/// Rephase b so that <a|b> becomes real and strictly positive.
/// Orthogonal inputs are rejected: the U(1) freedom cannot fix a vanishing
/// overlap, and the geodesic/NPC constructions need xi > 0.
inline PureState gauge_align(const PureState& a, const PureState& b) {
  const Complex ov = inner(a, b);
  if (std::abs(ov) <= kInvariantTol) {
    throw std::invalid_argument("gauge_align: states are (numerically) orthogonal");
  }
  const Complex phase = std::conj(ov) / std::abs(ov);
  return PureState(phase * b.amps());
}

/// One Majorana star: a qubit ray (alpha, beta) stored with a canonical
/// global phase (alpha real nonnegative when alpha != 0, otherwise beta
/// real positive) so multiset comparison and serialization are
/// well-defined.
class Star {
 public:
  Star(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    const double norm = std::sqrt(std::norm(alpha_) + std::norm(beta_));
    if (std::abs(norm - 1.0) > kNormTol) {
      throw std::invalid_argument("Star: (alpha, beta) norm deviates from 1 beyond tolerance");
    }
    alpha_ /= norm;
    beta_ /= norm;
    canonicalize();
  }

  /// Star of a finite Majorana root x: (1, x)/sqrt(1+|x|^2).
  static Star from_root(Complex x) {
    const double scale = std::sqrt(1.0 + std::norm(x));
    return Star(Complex(1.0, 0.0) / scale, x / scale);
  }

  static Star north_pole() { return Star(1.0, 0.0); }
  /// Root at infinity (vanishing leading polynomial coefficient).
  static Star south_pole() { return Star(0.0, 1.0); }

  static Star from_bloch(const Vec3& v) {
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
      throw std::invalid_argument("Star::from_bloch: vector is not unit length");
    }
    const Vec3 u = v / norm;
    const double polar = std::atan2(std::hypot(u.x(), u.y()), u.z());
    const double azimuth = std::atan2(u.y(), u.x());
    return Star(std::cos(polar / 2.0),
                std::polar(std::sin(polar / 2.0), azimuth));
  }

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

  /// Bloch vector <psi|sigma|psi>; unit length by construction.
  Vec3 bloch() const {
    const Complex cross = 2.0 * std::conj(alpha_) * beta_;
    return Vec3(cross.real(), cross.imag(), std::norm(alpha_) - std::norm(beta_));
  }

 private:
  void canonicalize() {
    const double amag = std::abs(alpha_);
    if (amag > 0.0) {
      const Complex phase = std::conj(alpha_) / amag;
      alpha_ = amag;
      beta_ *= phase;
    } else {
      beta_ = std::abs(beta_);
    }
  }

  Complex alpha_;
  Complex beta_;
};

inline Vec3 star_to_bloch(const Star& s) { return s.bloch(); }
inline Star bloch_to_star(const Vec3& v) { return Star::from_bloch(v); }

/// Multiset of the n-1 Majorana stars of an n-level state, kept in a
/// canonical order (ascending z, then azimuth) for deterministic
/// serialization. Semantics remain multiset.
class Constellation {
 public:
  Constellation(Eigen::Index dim, std::vector<Star> stars)
      : dim_(dim), stars_(std::move(stars)) {
    if (dim_ < 2) {
      throw std::invalid_argument("Constellation: dimension must be at least 2");
    }
    if (static_cast<Eigen::Index>(stars_.size()) != dim_ - 1) {
      throw std::invalid_argument("Constellation: expected dim-1 stars");
    }
    std::sort(stars_.begin(), stars_.end(), [](const Star& a, const Star& b) {
      const Vec3 va = a.bloch();
      const Vec3 vb = b.bloch();
      if (va.z() != vb.z()) return va.z() < vb.z();
      return std::atan2(va.y(), va.x()) < std::atan2(vb.y(), vb.x());
    });
  }

  Eigen::Index dim() const { return dim_; }
  const std::vector<Star>& stars() const { return stars_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(stars_.size()); }

  /// Largest pairwise Bloch distance; 0 means fully degenerate.
  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < stars_.size(); ++i) {
      for (std::size_t j = i + 1; j < stars_.size(); ++j) {
        d = std::max(d, (stars_[i].bloch() - stars_[j].bloch()).norm());
      }
    }
    return d;
  }

 private:
  Eigen::Index dim_;
  std::vector<Star> stars_;
};

/// Ordered samples (s_i, |Psi(s_i)>) of a continuously parametrized curve.
class StateCurve {
 public:
  StateCurve(std::vector<double> params, std::vector<PureState> states)
      : params_(std::move(params)), states_(std::move(states)) {
    if (params_.size() != states_.size()) {
      throw std::invalid_argument("StateCurve: parameter/state count mismatch");
    }
    if (params_.size() < 2) {
      throw std::invalid_argument("StateCurve: need at least two samples");
    }
    const Eigen::Index dim = states_.front().dim();
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (states_[i].dim() != dim) {
        throw std::invalid_argument("StateCurve: mixed state dimensions");
      }
      if (i + 1 < params_.size()) {
        if (!(params_[i] < params_[i + 1])) {
          throw std::invalid_argument("StateCurve: parameters must increase strictly");
        }
        if (fidelity(states_[i], states_[i + 1]) <= kInvariantTol) {
          throw std::invalid_argument("StateCurve: consecutive samples are orthogonal");
        }
      }
    }
  }

  const std::vector<double>& params() const { return params_; }
  const std::vector<PureState>& states() const { return states_; }
  Eigen::Index dim() const { return states_.front().dim(); }
  std::size_t size() const { return params_.size(); }

 private:
  std::vector<double> params_;
  std::vector<PureState> states_;
};

}  // namespace msr
