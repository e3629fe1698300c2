#pragma once

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <utility>

namespace freepacket {

using Complex = std::complex<double>;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Physical constants every formula is expressed in.
struct PhysicsParams {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0)) {
      throw std::invalid_argument("PhysicsParams: hbar and mass must be positive");
    }
  }
};

enum class Representation { Position, Momentum };

/// Uniform sampling x_j = x0 + j*step, j = 0..n-1, with n a power of two.
///
/// The conjugate momentum lattice is always centered:
/// p_k = 2*pi*hbar*(k - n/2) / (n*step).
class Grid {
 public:
  Grid(double x0, double step, Index n) : x0_(x0), step_(step), n_(n) {
    if (!(step > 0.0)) throw std::invalid_argument("Grid: step must be positive");
    if (n < 8 || (n & (n - 1)) != 0) {
      throw std::invalid_argument("Grid: n must be a power of two and at least 8");
    }
  }

  /// Symmetric grid on [-half_width, half_width), so that x_{n/2} = 0.
  static Grid centered(double half_width, Index n) {
    if (!(half_width > 0.0)) throw std::invalid_argument("Grid: half_width must be positive");
    const double step = 2.0 * half_width / static_cast<double>(n);
    return Grid(-half_width, step, n);
  }

  /// Centered grid with a prescribed spacing.
  static Grid centered_with_step(double step, Index n) {
    return Grid(-0.5 * static_cast<double>(n) * step, step, n);
  }

  double x0() const { return x0_; }
  double step() const { return step_; }
  Index size() const { return n_; }
  double half_width() const { return 0.5 * static_cast<double>(n_) * step_; }

  double x(Index j) const { return x0_ + static_cast<double>(j) * step_; }

  Eigen::ArrayXd positions() const {
    return x0_ + step_ * Eigen::ArrayXd::LinSpaced(n_, 0.0, static_cast<double>(n_ - 1));
  }

  double momentum_step(double hbar) const {
    return 2.0 * kPi * hbar / (static_cast<double>(n_) * step_);
  }

  double p(Index k, double hbar) const {
    return static_cast<double>(k - n_ / 2) * momentum_step(hbar);
  }

  Eigen::ArrayXd momenta(double hbar) const {
    return momentum_step(hbar) *
           Eigen::ArrayXd::LinSpaced(n_, static_cast<double>(-n_ / 2),
                                     static_cast<double>(n_ - 1 - n_ / 2));
  }

  /// Largest |p| representable on the lattice.
  double momentum_cutoff(double hbar) const {
    return 0.5 * static_cast<double>(n_) * momentum_step(hbar);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double x0_;
  double step_;
  Index n_;
};

/// Complex amplitudes on a grid, either psi(x_j) or phi(p_k).
///
/// `hbar` fixes the conjugate lattice spacing for momentum-space fields.
struct ComplexField {
  Grid grid;
  Eigen::ArrayXcd values;
  Representation representation = Representation::Position;
  double hbar = 1.0;

  ComplexField(Grid g, Eigen::ArrayXcd v, Representation rep = Representation::Position,
               double h = 1.0)
      : grid(std::move(g)), values(std::move(v)), representation(rep), hbar(h) {
    if (values.size() != grid.size()) {
      throw std::invalid_argument("ComplexField: values length does not match grid");
    }
  }

  static ComplexField zeros(const Grid& g, Representation rep = Representation::Position,
                            double h = 1.0) {
    return ComplexField(g, Eigen::ArrayXcd::Zero(g.size()), rep, h);
  }

  Index size() const { return values.size(); }

  /// Sample spacing of the lattice this field lives on.
  double spacing() const {
    return representation == Representation::Position ? grid.step()
                                                       : grid.momentum_step(hbar);
  }

  /// Coordinate of sample i (x_i or p_i).
  double coordinate(Index i) const {
    return representation == Representation::Position ? grid.x(i) : grid.p(i, hbar);
  }
};

/// Samples fn(x_j) on the position lattice.
template <class Fn>
ComplexField sample(const Grid& grid, Fn&& fn) {
  Eigen::ArrayXcd v(grid.size());
  for (Index j = 0; j < grid.size(); ++j) v[j] = Complex(fn(grid.x(j)));
  return ComplexField(grid, std::move(v), Representation::Position);
}

/// Samples fn(p_k) on the momentum lattice.
template <class Fn>
ComplexField sample_momentum(const Grid& grid, double hbar, Fn&& fn) {
  Eigen::ArrayXcd v(grid.size());
  for (Index k = 0; k < grid.size(); ++k) v[k] = Complex(fn(grid.p(k, hbar)));
  return ComplexField(grid, std::move(v), Representation::Momentum, hbar);
}

}  // namespace freepacket
