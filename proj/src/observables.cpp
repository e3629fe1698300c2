#include "freepacket/observables.hpp"

#include "freepacket/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace freepacket {

namespace {

template <class Derived>
typename Derived::Scalar trapezoid(const Eigen::ArrayBase<Derived>& expr, double h) {
  const auto v = expr.eval();
  return h * (v.sum() - 0.5 * (v[0] + v[v.size() - 1]));
}

constexpr double kNormTolerance = 1e-6;
constexpr double kDivergenceRatio = 1.01;

}  // namespace

PacketMoments moments(const ComplexField& f, const PhysicsParams& params) {
  if (f.representation != Representation::Position) {
    throw std::invalid_argument("moments: field is not in position representation");
  }
  params.validate();
  const double norm = quadrature_norm2(f);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("moments: field is not normalized (norm^2 = " + std::to_string(norm) + ")");
  }

  const Eigen::ArrayXd x = f.grid.positions();
  const Eigen::ArrayXd density = f.values.abs2();
  const double h = f.grid.step();

  PacketMoments out;
  out.mean_x = trapezoid(x * density, h);
  const Eigen::ArrayXd dx = x - out.mean_x;
  out.delta_x = std::sqrt(trapezoid(dx.square() * density, h));

  const ComplexField phi = to_momentum(f, params);
  const Eigen::ArrayXd p = f.grid.momenta(params.hbar);
  const Eigen::ArrayXd pdensity = phi.values.abs2();
  const double dp = phi.spacing();
  out.mean_p = trapezoid(p * pdensity, dp);
  out.delta_p = std::sqrt(trapezoid((p - out.mean_p).square() * pdensity, dp));

  // <R> = Re int conj(psi) X (-i hbar d_x - <p>) psi dx
  const ComplexField dpsi = spectral_derivative(f, 1);
  const Eigen::ArrayXcd momentum_action =
      Complex(0.0, -params.hbar) * dpsi.values - out.mean_p * f.values;
  out.mean_r = trapezoid(f.values.conjugate() * dx.cast<Complex>() * momentum_action, h).real();
  return out;
}

PacketMoments refined_moments(const std::function<Complex(double)>& psi, const Grid& grid,
                              const PhysicsParams& params) {
  const auto measure = [&](const Grid& g) {
    ComplexField f = sample(g, psi);
    const double norm = quadrature_norm2(f);
    if (!(norm > 0.0)) throw std::invalid_argument("refined_moments: sampled field vanishes");
    f.values /= std::sqrt(norm);
    return moments(f, params);
  };

  const Index n = grid.size();
  PacketMoments base = measure(grid);
  const PacketMoments fine = measure(Grid(grid.x0(), 0.5 * grid.step(), 2 * n));
  const PacketMoments wide =
      measure(Grid(grid.x0() - 0.5 * static_cast<double>(n) * grid.step(), grid.step(), 2 * n));

  // Momentum tails leave a finite window once the packet has evolved, so a
  // divergent spread can show up under widening as well as under refinement.
  if (fine.delta_p > kDivergenceRatio * base.delta_p || wide.delta_p > kDivergenceRatio * base.delta_p) {
    base.delta_p = std::numeric_limits<double>::infinity();
  }
  if (wide.delta_x > kDivergenceRatio * base.delta_x) {
    const double unavailable = std::numeric_limits<double>::quiet_NaN();
    base.delta_x = unavailable;
    base.mean_x = unavailable;
    base.mean_r = unavailable;
  }
  return base;
}

SpreadLaw spread_law_from_state(const PacketMoments& m0, const PhysicsParams& params, double t_now) {
  params.validate();
  SpreadLaw law;
  law.delta_p = m0.delta_p;
  if (std::isinf(m0.delta_p)) {
    // Discontinuous packet: the spread exists only at the measured instant,
    // which is then necessarily the waist.
    law.t_min = t_now;
    law.delta_min = m0.delta_x;
    return law;
  }
  const double dp2 = m0.delta_p * m0.delta_p;
  law.t_min = t_now - params.mass * m0.mean_r / dp2;
  const double elapsed = t_now - law.t_min;
  const double dmin2 = m0.delta_x * m0.delta_x - dp2 * elapsed * elapsed / (params.mass * params.mass);
  const double tolerance = 1e-10 * std::max(1.0, m0.delta_x * m0.delta_x);
  if (dmin2 < -tolerance) {
    throw std::domain_error("spread_law_from_state: inconsistent moments (Delta_min^2 < 0)");
  }
  law.delta_min = std::sqrt(std::max(dmin2, 0.0));
  return law;
}

double spread_prediction(const SpreadLaw& law, const PhysicsParams& params, double t) {
  const double drift = (t - law.t_min) * law.delta_p / params.mass;
  return std::sqrt(law.delta_min * law.delta_min + drift * drift);
}

Timescales timescales(const PacketMoments& m0, const PhysicsParams& params, double t_now) {
  const SpreadLaw law = spread_law_from_state(m0, params, t_now);
  const double m = params.mass;
  const double hbar = params.hbar;
  Timescales ts;
  ts.t_x = 2.0 * m * law.delta_min * law.delta_min / hbar;
  ts.t_x_initial = 2.0 * m * m0.delta_x * m0.delta_x / hbar;
  if (std::isinf(m0.delta_p)) {
    ts.t_p = 0.0;
    ts.t_h = 0.0;
    ts.short_time_applicable = false;
    return ts;
  }
  ts.t_p = m * hbar / (2.0 * m0.delta_p * m0.delta_p);
  ts.t_h = m * law.delta_min / m0.delta_p;
  return ts;
}

}  // namespace freepacket
