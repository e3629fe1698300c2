#pragma once

#include "freepacket/grid.hpp"

#include <functional>

namespace freepacket {

/// First and second moments of a normalized packet. mean_r is
/// <R> = <(P X + X P)/2> with X = x - <x>, P = p - <p>.
struct PacketMoments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double delta_x = 0.0;
  double delta_p = 0.0;
  double mean_r = 0.0;
};

/// Delta_x(t) = sqrt(delta_min^2 + (t - t_min)^2 delta_p^2 / m^2).
struct SpreadLaw {
  double delta_min = 0.0;
  double t_min = 0.0;
  double delta_p = 0.0;
};

/// t_p = m hbar / 2 Delta_p^2, t_x = 2 m Delta_min^2 / hbar, t_h = m Delta_min / Delta_p.
///
/// t_h is the geometric mean sqrt(t_x t_p), although it is sometimes called the
/// harmonic mean. t_x_initial uses the spread at the measured instant instead of
/// Delta_min; the two agree when the packet is at its waist.
struct Timescales {
  double t_p = 0.0;
  double t_x = 0.0;
  double t_h = 0.0;
  double t_x_initial = 0.0;
  bool short_time_applicable = true;
};

/// Moments by trapezoidal quadrature. Throws std::invalid_argument if the
/// field is not normalized to within 1e-6.
PacketMoments moments(const ComplexField& f, const PhysicsParams& params);

/// Moments of an analytic sampler with divergence detection.
///
/// Evaluates on `grid`, on a grid of half the step over the same span, and on
/// a grid of the same step and twice the span. Each sampled field is
/// normalized first. If delta_p grows by more than 1% under either change it
/// is reported as +inf; if delta_x grows by more than 1% under widening it (and
/// mean_x, mean_r) is reported as NaN (unavailable).
PacketMoments refined_moments(const std::function<Complex(double)>& psi, const Grid& grid,
                              const PhysicsParams& params);

/// Spread law from moments measured at t_now. Throws std::domain_error when
/// the implied Delta_min^2 is negative beyond round-off.
SpreadLaw spread_law_from_state(const PacketMoments& m0, const PhysicsParams& params, double t_now);

double spread_prediction(const SpreadLaw& law, const PhysicsParams& params, double t);

Timescales timescales(const PacketMoments& m0, const PhysicsParams& params, double t_now = 0.0);

}  // namespace freepacket
