#include "freepacket/evolution.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace freepacket {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_position(const ComplexField& f, const char* what) {
  if (f.representation != Representation::Position) throw std::invalid_argument(what);
}

}  // namespace

PropagationResult propagate_spectral(const ComplexField& psi0, double t, const PhysicsParams& params) {
  require_position(psi0, "propagate_spectral: field is not in position representation");
  params.validate();
  if (t == 0.0) return {psi0, t, PropagationMethod::SpectralExact};

  ComplexField phi = to_momentum(psi0, params);
  const Eigen::ArrayXd p = psi0.grid.momenta(params.hbar);
  const Eigen::ArrayXd phase = -p.square() * t / (2.0 * params.mass * params.hbar);
  phi.values *= (kI * phase.cast<Complex>()).exp();
  return {from_momentum(phi, params), t, PropagationMethod::SpectralExact};
}

PropagationResult propagate_quadrature(const ComplexField& psi0, double t, const PhysicsParams& params) {
  require_position(psi0, "propagate_quadrature: field is not in position representation");
  params.validate();
  if (t == 0.0) throw std::domain_error("propagate_quadrature: kernel is singular at t = 0");

  const Grid& grid = psi0.grid;
  const Index n = grid.size();
  const double h = grid.step();
  const double m = params.mass;
  const double hbar = params.hbar;

  // K depends on x - x' = (i - j) h only: tabulate it for every lattice offset.
  const Complex amplitude = std::sqrt(m / (2.0 * kPi * kI * hbar * t));
  std::vector<Complex> kernel(static_cast<std::size_t>(2 * n - 1));
  for (Index d = -(n - 1); d <= n - 1; ++d) {
    const double dx = static_cast<double>(d) * h;
    kernel[static_cast<std::size_t>(d + n - 1)] =
        amplitude * std::polar(1.0, m * dx * dx / (2.0 * hbar * t));
  }

  // Trapezoidal weights; zero samples are skipped.
  std::vector<Index> support;
  std::vector<Complex> weighted;
  for (Index j = 0; j < n; ++j) {
    if (psi0.values[j] == Complex(0.0)) continue;
    const double w = (j == 0 || j == n - 1) ? 0.5 * h : h;
    support.push_back(j);
    weighted.push_back(w * psi0.values[j]);
  }

  ComplexField out = ComplexField::zeros(grid);
  for (Index i = 0; i < n; ++i) {
    Complex acc = 0.0;
    const Complex* row = kernel.data() + (i + n - 1);
    for (std::size_t s = 0; s < support.size(); ++s) acc += row[-support[s]] * weighted[s];
    out.values[i] = acc;
  }
  return {std::move(out), t, PropagationMethod::Quadrature};
}

PropagationResult short_time_approx(const ComplexField& psi0, double t, const PhysicsParams& params,
                                    double pbar) {
  require_position(psi0, "short_time_approx: field is not in position representation");
  params.validate();
  if (t == 0.0) return {psi0, t, PropagationMethod::ShortTime};

  const double shift = pbar * t / params.mass;
  ComplexField phi = to_momentum(psi0, params);
  const Eigen::ArrayXd p = psi0.grid.momenta(params.hbar);
  const Eigen::ArrayXd phase = -p * shift / params.hbar;
  phi.values *= (kI * phase.cast<Complex>()).exp();
  ComplexField out = from_momentum(phi, params);
  // p^2 = -pbar^2 + 2 pbar p + (p - pbar)^2, so the residual phase is +pbar^2 t / 2 m hbar.
  out.values *= std::polar(1.0, pbar * pbar * t / (2.0 * params.mass * params.hbar));
  return {std::move(out), t, PropagationMethod::ShortTime};
}

std::optional<double> short_time_error_bound(double delta_p, double t, const PhysicsParams& params) {
  params.validate();
  if (t < 0.0) throw std::domain_error("short_time_error_bound: t must be non-negative");
  if (std::isnan(delta_p) || delta_p < 0.0) {
    throw std::domain_error("short_time_error_bound: delta_p must be non-negative");
  }
  if (std::isinf(delta_p)) return std::nullopt;
  const double h3 = params.hbar * params.hbar * params.hbar;
  return std::sqrt(t / (kPi * params.mass * h3)) * delta_p * delta_p;
}

ShortTimeScales short_time_scales(double delta_p, const PhysicsParams& params) {
  params.validate();
  const double dp2 = delta_p * delta_p;
  return {params.mass * params.hbar / (2.0 * dp2), kPi * params.mass * params.hbar / dp2};
}

PropagationResult asymptotic_form(const Grid& grid, const MomentumFunction& phi, double xbar,
                                  double t, const PhysicsParams& params) {
  params.validate();
  if (t == 0.0) throw std::domain_error("asymptotic_form: undefined at t = 0");
  const double m = params.mass;
  const double hbar = params.hbar;
  const Complex amplitude = std::sqrt(Complex(m / t) / kI);
  ComplexField out = ComplexField::zeros(grid);
  for (Index j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const double chirp = m * (x * x - xbar * xbar) / (2.0 * hbar * t);
    out.values[j] = amplitude * std::polar(1.0, chirp) * phi(m * (x - xbar) / t);
  }
  return {std::move(out), t, PropagationMethod::Asymptotic};
}

PropagationResult asymptotic_form(const ComplexField& phi0, double xbar, double t,
                                  const PhysicsParams& params) {
  if (phi0.representation != Representation::Momentum) {
    throw std::invalid_argument("asymptotic_form: field is not in momentum representation");
  }
  if (t == 0.0) throw std::domain_error("asymptotic_form: undefined at t = 0");
  const ComplexField psi0 = from_momentum(phi0, params);
  const Grid& grid = phi0.grid;
  const double cutoff = grid.momentum_cutoff(params.hbar);
  const MomentumFunction interpolate = [&](double p) -> Complex {
    if (p < -cutoff || p >= cutoff) return 0.0;
    return momentum_amplitude_at(psi0, p, params);
  };
  return asymptotic_form(grid, interpolate, xbar, t, params);
}

std::optional<double> asymptotic_error_bound(double delta_x, double t, const PhysicsParams& params) {
  params.validate();
  if (!(t > 0.0)) throw std::domain_error("asymptotic_error_bound: requires t > 0");
  if (!std::isfinite(delta_x)) return std::nullopt;
  const double m = params.mass;
  const double ratio = m / (params.hbar * t);
  return std::sqrt(ratio * ratio * ratio / kPi) * delta_x * delta_x;
}

double sup_abs2_difference(const ComplexField& a, const ComplexField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_abs2_difference: size mismatch");
  return (a.values - b.values).abs2().maxCoeff();
}

}  // namespace freepacket
