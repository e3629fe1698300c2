#pragma once

#include "freepacket/fourier.hpp"
#include "freepacket/grid.hpp"

#include <functional>
#include <optional>

namespace freepacket {

enum class PropagationMethod { SpectralExact, Quadrature, ShortTime, Asymptotic };

struct PropagationResult {
  ComplexField field;
  double t = 0.0;
  PropagationMethod method = PropagationMethod::SpectralExact;
};

/// Exact free evolution on the periodic grid: phi(p) -> phi(p) exp(-i p^2 t / 2 m hbar).
///
/// Content reaching the grid edges wraps around; size the grid so the packet
/// stays decayed at the edges over the requested time.
PropagationResult propagate_spectral(const ComplexField& psi0, double t, const PhysicsParams& params);

/// Direct O(N^2) trapezoidal evaluation of int K(x, x', t) psi0(x') dx' with
/// K = sqrt(m / 2 pi i hbar t) exp[i m (x - x')^2 / 2 hbar t].
///
/// Independent of the FFT path. Accurate when step <= hbar / (4 p_max), p_max
/// being the largest momentum m |x - x'| / t the integrand resolves. Throws at t = 0.
PropagationResult propagate_quadrature(const ComplexField& psi0, double t, const PhysicsParams& params);

/// Rigid translation exp(+i pbar^2 t / 2 m hbar) psi0(x - pbar t / m), the shift
/// applied exactly in the momentum representation.
PropagationResult short_time_approx(const ComplexField& psi0, double t, const PhysicsParams& params,
                                    double pbar);

/// sup_x |delta psi|^2 <= sqrt(t / (pi m hbar^3)) delta_p^2 for the short-time remainder.
/// Returns nullopt when delta_p is infinite (discontinuous packets).
std::optional<double> short_time_error_bound(double delta_p, double t, const PhysicsParams& params);

/// Both short-time scales in circulation: m hbar / 2 dp^2 (heuristic) and
/// pi m hbar / dp^2 (from the rigorous bound). `stricter` is the smaller one.
struct ShortTimeScales {
  double heuristic = 0.0;
  double rigorous = 0.0;
  double stricter() const { return heuristic < rigorous ? heuristic : rigorous; }
};
ShortTimeScales short_time_scales(double delta_p, const PhysicsParams& params);

using MomentumFunction = std::function<Complex(double)>;

/// Large-t form sqrt(m / i t) exp[i m (x^2 - xbar^2) / 2 hbar t] phi(m (x - xbar) / t)
/// on the grid of phi0. phi is evaluated by exact band-limited interpolation of
/// the lattice values and taken as zero outside the lattice band. Throws at t = 0.
PropagationResult asymptotic_form(const ComplexField& phi0, double xbar, double t,
                                  const PhysicsParams& params);

/// Same map with an analytic momentum amplitude, evaluated on `grid`.
PropagationResult asymptotic_form(const Grid& grid, const MomentumFunction& phi, double xbar,
                                  double t, const PhysicsParams& params);

/// sup_x |delta psi|^2 <= sqrt(m^3 / (pi hbar^3 t^3)) delta_x^2 for the asymptotic
/// remainder. delta_x must be measured at the initial instant. Returns nullopt
/// when delta_x is not finite. Throws for t <= 0.
std::optional<double> asymptotic_error_bound(double delta_x, double t, const PhysicsParams& params);

/// max_j |a_j - b_j|^2.
double sup_abs2_difference(const ComplexField& a, const ComplexField& b);

}  // namespace freepacket
