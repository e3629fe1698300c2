#pragma once

#include "freepacket/grid.hpp"

#include <cmath>

// Closed-form free-particle solutions. Every family is normalized to unit L2
// norm at every t and is an exact solution of i hbar d_t psi = -(hbar^2/2m) d_x^2 psi.

namespace freepacket {

inline constexpr int kMaxDerivativeOrder = 16;

/// Schroedinger's Gaussian and the Hermite-Gauss packets built on it.
struct GaussianFamily {
  PhysicsParams params;
  double tau = 1.0;

  GaussianFamily() = default;
  GaussianFamily(PhysicsParams p, double tau_) : params(p), tau(tau_) { validate(); }

  void validate() const {
    params.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("GaussianFamily: tau must be positive");
  }

  /// Length scale gamma(t) = [hbar (t^2 + tau^2) / (m tau)]^{1/2}.
  double gamma(double t) const {
    return std::sqrt(params.hbar * (t * t + tau * tau) / (params.mass * tau));
  }

  /// Chirp phase theta = t x^2 / (2 tau gamma^2).
  double theta(double x, double t) const {
    const double g = gamma(t);
    return t * x * x / (2.0 * tau * g * g);
  }

  /// beta = arg(t - i tau), in (-pi, 0); continuous in t.
  double beta(double t) const { return std::atan2(-tau, t); }
};

/// Initially square packet of width a centred at the origin.
struct SquareFamily {
  PhysicsParams params;
  double a = 1.0;

  SquareFamily() = default;
  SquareFamily(PhysicsParams p, double a_) : params(p), a(a_) { validate(); }

  void validate() const {
    params.validate();
    if (!(a > 0.0)) throw std::invalid_argument("SquareFamily: width must be positive");
  }
};

/// chi(x,t) = (m tau / pi hbar)^{1/4} (t - i tau)^{-1/2} exp[i m x^2 / (2 hbar (t - i tau))].
Complex gaussian_chi(const GaussianFamily& fam, double x, double t);

/// Normalized Hermite-Gauss packet chi_n; shape invariant under free evolution.
///   chi_n = pi^{-1/4} (gamma 2^n n!)^{-1/2} e^{i(theta - (n + 1/2) beta)}
///           e^{-x^2/2gamma^2} H_n(x/gamma)
/// chi_0 coincides with gaussian_chi.
Complex hermite_gauss(const GaussianFamily& fam, int n, double x, double t);

/// (m x - (t + i tau) p) f with p = -i hbar d_x applied spectrally.
ComplexField apply_b_dagger(const ComplexField& f, const GaussianFamily& fam, double t);

/// Normalized n-th spatial derivative of chi:
///   c_n (m tau/pi hbar)^{1/4} (2 hbar/m)^{1/2} kappa (-kappa)^n H_n(kappa x) e^{-kappa^2 x^2},
/// kappa^2 = -i m / (2 hbar (t - i tau)) (principal root), c_n = [(m/2 hbar tau)^n (2n-1)!!]^{-1/2}.
/// Real at t = 0.
Complex derivative_packet(const GaussianFamily& fam, int n, double x, double t);

/// Large-t form of derivative_packet(2, x, t):
///   -N' x^2 t^{-5/2} exp(-m tau x^2 / 2 hbar t^2) exp(i m x^2 / 2 hbar t),
/// N' = 2 (m^5 tau^5 / 9 pi hbar^5)^{1/4}. Requires t > 0.
/// The modulus is the familiar magnitude reference; the phase is the one the
/// momentum-space asymptotic map assigns, so the value compares directly with
/// propagated fields.
Complex derivative_packet_asymptote(const GaussianFamily& fam, double x, double t);

/// 1/sqrt(a) for |x| < a/2, otherwise 0 (including exactly at the jumps).
Complex square_initial(const SquareFamily& fam, double x);

/// sqrt(a / 2 pi hbar) sinc(a p / 2 hbar).
Complex square_momentum(const SquareFamily& fam, double p);

/// Exact free evolution of the square packet through Fresnel integrals.
///
/// With u(x') = sqrt(m / (pi hbar t)) (x' - x) and F = C + iS, for t > 0
///   psi(x,t) = (2 i a)^{-1/2} [F(u(a/2)) - F(u(-a/2))].
/// The initial data are real, so psi(x,-t) = conj(psi(x,t)). Throws at t = 0.
Complex square_exact(const SquareFamily& fam, double x, double t);

/// Galilean boost of a resting solution xi(x,t):
///   psi(x,t) = exp[(i/hbar)(p x - p^2 (t - t0)/2m)] xi(x - p (t - t0)/m, t).
template <class Packet>
auto galilean_boost(Packet xi, double p, double t0, const PhysicsParams& params) {
  params.validate();
  return [xi = std::move(xi), p, t0, params](double x, double t) -> Complex {
    const double dt = t - t0;
    const double phase = (p * x - p * p * dt / (2.0 * params.mass)) / params.hbar;
    return std::polar(1.0, phase) * Complex(xi(x - p * dt / params.mass, t));
  };
}

/// Multiplies a position-space field by exp(i p x / hbar).
ComplexField boost(const ComplexField& f, double p, const PhysicsParams& params);

}  // namespace freepacket
