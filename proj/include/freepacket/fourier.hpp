#pragma once

#include "freepacket/grid.hpp"

namespace freepacket {

/// Continuous-convention momentum transform
///   phi(p) = (2 pi hbar)^{-1/2} int exp(-i p x / hbar) psi(x) dx
/// evaluated on the centered momentum lattice of f.grid. The discrete sum is
/// exact for grid-supported data; Parseval holds for the plain sums.
ComplexField to_momentum(const ComplexField& f, const PhysicsParams& params);

/// Inverse of to_momentum.
ComplexField from_momentum(const ComplexField& f, const PhysicsParams& params);

/// d^order f / dx^order via multiplication by (i p / hbar)^order.
/// For odd orders the unpaired Nyquist mode is dropped.
ComplexField spectral_derivative(const ComplexField& f, int order);

/// Trapezoidal estimate of int |f|^2 over the lattice f lives on.
double quadrature_norm2(const ComplexField& f);

/// Trapezoidal estimate of int conj(a) b.
Complex quadrature_inner(const ComplexField& a, const ComplexField& b);

/// Relative L2 distance ||a - b|| / ||b|| under the trapezoidal rule.
double relative_l2_distance(const ComplexField& a, const ComplexField& b);

/// Evaluates the momentum transform of grid-supported position data at an
/// arbitrary momentum (exact band-limited interpolation of the lattice values).
Complex momentum_amplitude_at(const ComplexField& psi, double p, const PhysicsParams& params);

}  // namespace freepacket
