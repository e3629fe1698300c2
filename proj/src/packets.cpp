#include "freepacket/packets.hpp"

#include "freepacket/fourier.hpp"
#include "freepacket/special_functions.hpp"

namespace freepacket {

namespace {

constexpr Complex kI(0.0, 1.0);

double double_factorial_odd(int n) {
  // (2n - 1)!!, with (-1)!! = 1
  double r = 1.0;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

Complex gaussian_chi(const GaussianFamily& fam, double x, double t) {
  const double m = fam.params.mass;
  const double hbar = fam.params.hbar;
  const Complex s(t, -fam.tau);
  const double prefactor = std::pow(m * fam.tau / (kPi * hbar), 0.25);
  return prefactor / std::sqrt(s) * std::exp(kI * m * x * x / (2.0 * hbar * s));
}

Complex hermite_gauss(const GaussianFamily& fam, int n, double x, double t) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw std::domain_error("hermite_gauss: order outside [0, 64]");
  }
  const double g = fam.gamma(t);
  const double amplitude = hermite_function(n, x / g) / std::sqrt(g);
  const double phase = fam.theta(x, t) - (n + 0.5) * fam.beta(t);
  return std::polar(amplitude, phase);
}

ComplexField apply_b_dagger(const ComplexField& f, const GaussianFamily& fam, double t) {
  const ComplexField df = spectral_derivative(f, 1);
  const Complex coeff = kI * fam.params.hbar * Complex(t, fam.tau);
  ComplexField out = f;
  out.values = fam.params.mass * f.grid.positions() * f.values + coeff * df.values;
  return out;
}

Complex derivative_packet(const GaussianFamily& fam, int n, double x, double t) {
  if (n < 0 || n > kMaxDerivativeOrder) {
    throw std::domain_error("derivative_packet: order outside [0, 16]");
  }
  const double m = fam.params.mass;
  const double hbar = fam.params.hbar;
  const Complex s(t, -fam.tau);
  const Complex kappa2 = -kI * m / (2.0 * hbar * s);
  const Complex kappa = std::sqrt(kappa2);

  const double norm =
      1.0 / std::sqrt(std::pow(m / (2.0 * hbar * fam.tau), n) * double_factorial_odd(n));
  const double chi_prefactor = std::pow(m * fam.tau / (kPi * hbar), 0.25);

  // (-kappa)^n H_n(kappa x) is even in kappa, so the branch of kappa is immaterial.
  Complex kn(1.0);
  for (int i = 0; i < n; ++i) kn *= -kappa;
  // kappa sqrt(2 hbar / m) is (t - i tau)^{-1/2} up to the constant e^{-i pi/4},
  // and makes the packet real at t = 0.
  return norm * chi_prefactor * std::sqrt(2.0 * hbar / m) * kappa * kn * hermite(n, kappa * x) *
         std::exp(-kappa2 * x * x);
}

Complex derivative_packet_asymptote(const GaussianFamily& fam, double x, double t) {
  if (!(t > 0.0)) throw std::domain_error("derivative_packet_asymptote: requires t > 0");
  const double m = fam.params.mass;
  const double hbar = fam.params.hbar;
  const double tau = fam.tau;
  const double n_prime = 2.0 * std::pow(std::pow(m * tau / hbar, 5) / (9.0 * kPi), 0.25);
  const double magnitude =
      n_prime * x * x / std::pow(t, 2.5) * std::exp(-m * tau * x * x / (2.0 * hbar * t * t));
  // sqrt(m/it) times the momentum amplitude, which is -A p^2 exp(-tau p^2 / 2 m hbar)
  // with A > 0 because the packet is real at t = 0.
  const Complex phase = -1.0 / std::sqrt(kI) * std::polar(1.0, m * x * x / (2.0 * hbar * t));
  return magnitude * phase;
}

Complex square_initial(const SquareFamily& fam, double x) {
  return std::abs(x) < 0.5 * fam.a ? Complex(1.0 / std::sqrt(fam.a)) : Complex(0.0);
}

Complex square_momentum(const SquareFamily& fam, double p) {
  const double z = fam.a * p / (2.0 * fam.params.hbar);
  const double sinc = z == 0.0 ? 1.0 : std::sin(z) / z;
  return std::sqrt(fam.a / (2.0 * kPi * fam.params.hbar)) * sinc;
}

Complex square_exact(const SquareFamily& fam, double x, double t) {
  if (t == 0.0) throw std::domain_error("square_exact: t = 0, use square_initial");
  if (t < 0.0) return std::conj(square_exact(fam, x, -t));
  const double scale = std::sqrt(fam.params.mass / (kPi * fam.params.hbar * t));
  const FresnelPair upper = fresnel(scale * (0.5 * fam.a - x));
  const FresnelPair lower = fresnel(scale * (-0.5 * fam.a - x));
  const Complex diff(upper.c - lower.c, upper.s - lower.s);
  // (2i)^{-1/2} = (1 - i)/2
  return Complex(0.5, -0.5) / std::sqrt(fam.a) * diff;
}

ComplexField boost(const ComplexField& f, double p, const PhysicsParams& params) {
  if (f.representation != Representation::Position) {
    throw std::invalid_argument("boost: field is not in position representation");
  }
  ComplexField out = f;
  const Eigen::ArrayXd x = f.grid.positions();
  for (Index j = 0; j < f.size(); ++j) out.values[j] *= std::polar(1.0, p * x[j] / params.hbar);
  return out;
}

}  // namespace freepacket
