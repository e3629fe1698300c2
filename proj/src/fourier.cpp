#include "freepacket/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace freepacket {

namespace {

void require(const ComplexField& f, Representation rep, const char* what) {
  if (f.representation != rep) throw std::invalid_argument(what);
}

// exp(-i p_k x0 / hbar) for every k. The phase is 2 pi (k - n/2) (x0/step) / n,
// reduced modulo n before the trig call so large grids keep full precision.
Eigen::ArrayXcd origin_phase(const Grid& grid, double sign) {
  const Index n = grid.size();
  const double q = grid.x0() / grid.step();
  const double dn = static_cast<double>(n);
  Eigen::ArrayXcd phase(n);
  for (Index k = 0; k < n; ++k) {
    const double r = std::fmod(static_cast<double>(k - n / 2) * q, dn);
    phase[k] = std::polar(1.0, sign * 2.0 * kPi * r / dn);
  }
  return phase;
}

Eigen::ArrayXd alternating(Index n) {
  Eigen::ArrayXd s(n);
  for (Index j = 0; j < n; ++j) s[j] = (j % 2 == 0) ? 1.0 : -1.0;
  return s;
}

}  // namespace

ComplexField to_momentum(const ComplexField& f, const PhysicsParams& params) {
  require(f, Representation::Position, "to_momentum: field is not in position representation");
  params.validate();
  const Grid& grid = f.grid;
  const Index n = grid.size();

  Eigen::VectorXcd shifted = (f.values * alternating(n)).matrix();
  Eigen::VectorXcd spectrum(n);
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, shifted);

  const double amplitude = grid.step() / std::sqrt(2.0 * kPi * params.hbar);
  Eigen::ArrayXcd phi = amplitude * origin_phase(grid, -1.0) * spectrum.array();
  return ComplexField(grid, std::move(phi), Representation::Momentum, params.hbar);
}

ComplexField from_momentum(const ComplexField& f, const PhysicsParams& params) {
  require(f, Representation::Momentum, "from_momentum: field is not in momentum representation");
  params.validate();
  const Grid& grid = f.grid;
  const Index n = grid.size();

  Eigen::VectorXcd weighted = (f.values * origin_phase(grid, +1.0)).matrix();
  Eigen::VectorXcd signal(n);
  Eigen::FFT<double> fft;
  fft.inv(signal, weighted);  // includes the 1/n factor

  const double amplitude =
      grid.momentum_step(params.hbar) * static_cast<double>(n) / std::sqrt(2.0 * kPi * params.hbar);
  Eigen::ArrayXcd psi = amplitude * alternating(n) * signal.array();
  return ComplexField(grid, std::move(psi), Representation::Position);
}

ComplexField spectral_derivative(const ComplexField& f, int order) {
  require(f, Representation::Position, "spectral_derivative: field is not in position representation");
  if (order < 0) throw std::invalid_argument("spectral_derivative: negative order");
  if (order == 0) return f;

  // Wavenumbers p/hbar do not depend on hbar, so any unit works here.
  const PhysicsParams unit{};
  ComplexField phi = to_momentum(f, unit);
  const Eigen::ArrayXd k = f.grid.momenta(1.0);
  const Eigen::ArrayXcd ik = Complex(0.0, 1.0) * k.cast<Complex>();
  Eigen::ArrayXcd factor = ik;
  for (int i = 1; i < order; ++i) factor *= ik;
  if (order % 2 == 1) factor[0] = 0.0;
  phi.values *= factor;
  ComplexField out = from_momentum(phi, unit);
  return out;
}

double quadrature_norm2(const ComplexField& f) {
  const Index n = f.size();
  const Eigen::ArrayXd density = f.values.abs2();
  const double sum = density.sum() - 0.5 * (density[0] + density[n - 1]);
  return f.spacing() * sum;
}

Complex quadrature_inner(const ComplexField& a, const ComplexField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("quadrature_inner: size mismatch");
  const Index n = a.size();
  const Eigen::ArrayXcd prod = a.values.conjugate() * b.values;
  const Complex sum = prod.sum() - 0.5 * (prod[0] + prod[n - 1]);
  return a.spacing() * sum;
}

double relative_l2_distance(const ComplexField& a, const ComplexField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_l2_distance: size mismatch");
  ComplexField diff = a;
  diff.values -= b.values;
  return std::sqrt(quadrature_norm2(diff) / quadrature_norm2(b));
}

Complex momentum_amplitude_at(const ComplexField& psi, double p, const PhysicsParams& params) {
  require(psi, Representation::Position, "momentum_amplitude_at: field is not in position representation");
  const Grid& grid = psi.grid;
  // exp(-i p x_j / hbar) advanced by a fixed rotation per sample.
  const Complex start = std::polar(1.0, -p * grid.x0() / params.hbar);
  const Complex rotation = std::polar(1.0, -p * grid.step() / params.hbar);
  Complex phase = start;
  Complex acc = 0.0;
  for (Index j = 0; j < grid.size(); ++j) {
    acc += phase * psi.values[j];
    phase *= rotation;
    if ((j & 255) == 255) phase = std::polar(1.0, -p * grid.x(j + 1) / params.hbar);
  }
  return grid.step() / std::sqrt(2.0 * kPi * params.hbar) * acc;
}

}  // namespace freepacket
