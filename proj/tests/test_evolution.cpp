#include <doctest.h>

#include "freepacket/evolution.hpp"
#include "freepacket/observables.hpp"
#include "freepacket/packets.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace freepacket;

namespace {

const PhysicsParams kUnit{};
const GaussianFamily kFam(kUnit, 1.0);

ComplexField chi_at(const Grid& g, double t) {
  return sample(g, [t](double x) { return gaussian_chi(kFam, x, t); });
}

/// sup |psi(t) - rigid translation|^2, the translation using the mean momentum.
double short_time_defect(const ComplexField& psi0, double t) {
  const PacketMoments m0 = moments(psi0, kUnit);
  return sup_abs2_difference(propagate_spectral(psi0, t, kUnit).field,
                             short_time_approx(psi0, t, kUnit, m0.mean_p).field);
}

/// sup |psi(t) - large-t form|^2, centred on the initial mean position.
double asymptotic_defect(const ComplexField& psi0, double t) {
  const PacketMoments m0 = moments(psi0, kUnit);
  const ComplexField phi0 = to_momentum(psi0, kUnit);
  return sup_abs2_difference(propagate_spectral(psi0, t, kUnit).field,
                             asymptotic_form(phi0, m0.mean_x, t, kUnit).field);
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / (count - 1)));
  return out;
}

}  // namespace

TEST_SUITE("spectral propagation") {
  TEST_CASE("zero time is the identity") {
    const Grid g = Grid::centered(20.0, 512);
    const ComplexField psi0 = chi_at(g, 0.0);
    const PropagationResult r = propagate_spectral(psi0, 0.0, kUnit);
    CHECK((r.field.values - psi0.values).abs().maxCoeff() <= 1e-13);
    CHECK(r.method == PropagationMethod::SpectralExact);
  }

  TEST_CASE("Gaussian evolves into its closed form") {
    const Grid g = Grid::centered(40.0, 2048);
    const PropagationResult r = propagate_spectral(chi_at(g, 0.0), 2.0, kUnit);
    CHECK(r.t == 2.0);
    CHECK(relative_l2_distance(r.field, chi_at(g, 2.0)) <= 1e-9);
  }

  TEST_CASE("forward then backward recovers the initial field") {
    const Grid g = Grid::centered(40.0, 2048);
    const ComplexField psi0 = sample(g, [](double x) { return derivative_packet(kFam, 2, x, 0.0); });
    const ComplexField back = propagate_spectral(propagate_spectral(psi0, 1.7, kUnit).field, -1.7, kUnit).field;
    CHECK(relative_l2_distance(back, psi0) <= 1e-12);
  }

  TEST_CASE("unitarity and composition on random packets") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> time(-3.0, 3.0);
    const Grid g = Grid::centered(60.0, 2048);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexField psi0 = sample(g, oracle::RandomPacket::draw(rng));
      const double n0 = quadrature_norm2(psi0);
      const double t1 = time(rng), t2 = time(rng);
      const ComplexField a = propagate_spectral(psi0, t1, kUnit).field;
      CHECK(std::abs(quadrature_norm2(a) - n0) <= 1e-12 * n0);
      const ComplexField ab = propagate_spectral(a, t2, kUnit).field;
      const ComplexField direct = propagate_spectral(psi0, t1 + t2, kUnit).field;
      CHECK(relative_l2_distance(ab, direct) <= 1e-12);
    }
  }

  TEST_CASE("requires a position field") {
    const Grid g = Grid::centered(20.0, 64);
    CHECK_THROWS_AS(propagate_spectral(to_momentum(chi_at(g, 0.0), kUnit), 1.0, kUnit), std::invalid_argument);
  }
}

TEST_SUITE("quadrature propagation") {
  TEST_CASE("Gaussian against its closed form") {
    const Grid g = Grid::centered(40.0, 2048);
    const PropagationResult r = propagate_quadrature(chi_at(g, 0.0), 1.0, kUnit);
    CHECK(r.method == PropagationMethod::Quadrature);
    CHECK(relative_l2_distance(r.field, chi_at(g, 1.0)) <= 1e-8);
  }

  TEST_CASE("zero time is rejected") {
    const Grid g = Grid::centered(20.0, 64);
    CHECK_THROWS_AS(propagate_quadrature(chi_at(g, 0.0), 0.0, kUnit), std::domain_error);
  }

  TEST_CASE("agrees with spectral propagation on smooth decayed packets") {
    // Times long enough that the kernel chirp stays resolved across the grid.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> time(1.0, 3.0);
    const Grid g = Grid::centered(40.0, 2048);
    for (int trial = 0; trial < 6; ++trial) {
      const ComplexField psi0 = sample(g, oracle::RandomPacket::draw(rng));
      const double t = time(rng) * (trial % 2 == 0 ? 1.0 : -1.0);
      const ComplexField a = propagate_spectral(psi0, t, kUnit).field;
      const ComplexField b = propagate_quadrature(psi0, t, kUnit).field;
      INFO("t = " << t);
      CHECK(relative_l2_distance(b, a) <= 1e-8);
      CHECK(std::abs(quadrature_norm2(b) - quadrature_norm2(psi0)) <= 1e-10 * quadrature_norm2(psi0));
    }
  }

  TEST_CASE("square packet against the Fresnel form") {
    // a / step odd puts both jumps midway between samples.
    const SquareFamily sq(kUnit, 1.0);
    const double step = 1.0 / 4097.0;
    const Index n = 16384;
    const Grid g(-0.5 * n * step, step, n);
    const ComplexField psi0 = sample(g, [&](double x) { return square_initial(sq, x); });
    const double t = 0.05;
    const ComplexField r = propagate_quadrature(psi0, t, kUnit).field;
    double worst = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double x = g.x(j);
      if (std::abs(x) > 1.0) continue;
      worst = std::max(worst, std::abs(r.values[j] - square_exact(sq, x, t)));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_SUITE("short-time approximation") {
  TEST_CASE("zero time and zero momentum") {
    const Grid g = Grid::centered(20.0, 512);
    const ComplexField psi0 = chi_at(g, 0.3);
    CHECK((short_time_approx(psi0, 0.0, kUnit, 2.0).field.values - psi0.values).abs().maxCoeff() <= 1e-13);
    const ComplexField still = short_time_approx(psi0, 0.8, kUnit, 0.0).field;
    CHECK((still.values.abs2() - psi0.values.abs2()).abs().maxCoeff() <= 1e-13);
  }

  TEST_CASE("plane wave is reproduced exactly") {
    // A lattice plane wave has no momentum spread, so the translation is exact.
    const Grid g = Grid::centered(kPi * 8.0, 256);
    const double p = 2.0 * kPi / (2.0 * g.half_width()) * 8.0;
    const ComplexField wave = sample(g, [p](double x) { return std::polar(1.0, p * x); });
    const double t = 0.37;
    const ComplexField exact = propagate_spectral(wave, t, kUnit).field;
    const ComplexField approx = short_time_approx(wave, t, kUnit, p).field;
    CHECK((exact.values - approx.values).abs().maxCoeff() <= 1e-12);
  }

  TEST_CASE("translates by pbar t / m") {
    const Grid g = Grid::centered(30.0, 1024);
    const ComplexField psi0 = chi_at(g, 0.0);
    const ComplexField moved = short_time_approx(psi0, 0.5, kUnit, 3.0).field;
    const Complex phase = std::polar(1.0, 9.0 * 0.5 / 2.0);
    double worst = 0.0;
    for (Index j = 0; j < g.size(); ++j) {
      worst = std::max(worst, std::abs(moved.values[j] - phase * gaussian_chi(kFam, g.x(j) - 1.5, 0.0)));
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("bound examples") {
    CHECK(*short_time_error_bound(1.3, 0.0, kUnit) == 0.0);
    CHECK(*short_time_error_bound(1.3, 4.0, kUnit) == doctest::Approx(2.0 * *short_time_error_bound(1.3, 1.0, kUnit)));
    CHECK(*short_time_error_bound(2.0, 1.0, kUnit) == doctest::Approx(4.0 / std::sqrt(kPi)));
    CHECK_FALSE(short_time_error_bound(INFINITY, 1.0, kUnit).has_value());
    CHECK_THROWS(short_time_error_bound(1.0, -1.0, kUnit));
  }

  TEST_CASE("derivative packet respects the bound at t = 0.1") {
    const Grid g = Grid::centered(64.0, 4096);
    const ComplexField psi0 = sample(g, [](double x) { return derivative_packet(kFam, 2, x, 0.0); });
    const double bound = *short_time_error_bound(std::sqrt(2.5), 0.1, kUnit);
    CHECK(short_time_defect(psi0, 0.1) <= bound);
  }

  TEST_CASE("boosted Gaussian respects the bound at 1% of t_p") {
    const Grid g = Grid::centered(64.0, 4096);
    const ComplexField psi0 = boost(chi_at(g, 0.0), 5.0, kUnit);
    const PacketMoments m0 = moments(psi0, kUnit);
    const double t = 0.01 * timescales(m0, kUnit).t_p;
    const double measured = short_time_defect(psi0, t);
    CHECK(measured > 0.0);
    CHECK(measured <= *short_time_error_bound(m0.delta_p, t, kUnit));
  }

  TEST_CASE("both short-time scales") {
    const ShortTimeScales s = short_time_scales(std::sqrt(2.5), kUnit);
    CHECK(s.heuristic == doctest::Approx(0.2));
    CHECK(s.rigorous == doctest::Approx(kPi / 2.5));
    CHECK(s.stricter() == s.heuristic);
  }
}

TEST_SUITE("asymptotic form") {
  TEST_CASE("square packet gives the sinc-squared density") {
    const SquareFamily sq(kUnit, 1.0);
    const Grid g = Grid::centered(10.0, 1024);
    const double t = 0.7;
    const PropagationResult r =
        asymptotic_form(g, [&](double p) { return square_momentum(sq, p); }, 0.0, t, kUnit);
    CHECK(r.method == PropagationMethod::Asymptotic);
    for (Index j = 0; j < g.size(); j += 7) {
      const double z = g.x(j) / (2.0 * t);
      const double sinc = z == 0.0 ? 1.0 : std::sin(z) / z;
      CHECK(std::norm(r.field.values[j]) == doctest::Approx(sinc * sinc / (2.0 * kPi * t)).epsilon(1e-13).scale(1e-16));
    }
  }

  TEST_CASE("derivative packet gives the closed-form asymptote") {
    const Grid g = Grid::centered(64.0, 4096);
    const ComplexField phi0 =
        to_momentum(sample(g, [](double x) { return derivative_packet(kFam, 2, x, 0.0); }), kUnit);
    for (double t : {2.0, 9.0}) {
      const ComplexField a = asymptotic_form(phi0, 0.0, t, kUnit).field;
      double worst = 0.0;
      for (Index j = 0; j < g.size(); ++j) {
        worst = std::max(worst, std::abs(a.values[j] - derivative_packet_asymptote(kFam, g.x(j), t)));
      }
      CHECK(worst <= 1e-10);
    }
  }

  TEST_CASE("lattice interpolation matches analytic amplitude") {
    const Grid g = Grid::centered(30.0, 2048);
    const ComplexField psi0 = boost(chi_at(g, 0.0), 1.0, kUnit);
    const ComplexField phi0 = to_momentum(psi0, kUnit);
    // chi(x, 0) carries the constant phase of (-i tau)^{-1/2}.
    const Complex unit_phase = gaussian_chi(kFam, 0.0, 0.0) / std::abs(gaussian_chi(kFam, 0.0, 0.0));
    const MomentumFunction exact = [&](double p) {
      return unit_phase * std::exp(-0.5 * (p - 1.0) * (p - 1.0)) / std::pow(kPi, 0.25);
    };
    const ComplexField a = asymptotic_form(phi0, 0.4, 3.0, kUnit).field;
    const ComplexField b = asymptotic_form(g, exact, 0.4, 3.0, kUnit).field;
    CHECK((a.values - b.values).abs().maxCoeff() <= 1e-12);
  }

  TEST_CASE("density integrates to one at late times") {
    const Grid g = Grid::centered(400.0, 16384);
    const ComplexField phi0 =
        to_momentum(sample(g, [](double x) { return derivative_packet(kFam, 2, x, 0.0); }), kUnit);
    const double t = 20.0 * (7.0 / 3.0);
    CHECK(std::abs(quadrature_norm2(asymptotic_form(phi0, 0.0, t, kUnit).field) - 1.0) <= 1e-8);
  }

  TEST_CASE("zero time is rejected") {
    const Grid g = Grid::centered(20.0, 64);
    CHECK_THROWS(asymptotic_form(to_momentum(chi_at(g, 0.0), kUnit), 0.0, 0.0, kUnit));
    CHECK_THROWS(asymptotic_form(chi_at(g, 0.0), 0.0, 1.0, kUnit));
  }

  TEST_CASE("bound examples") {
    CHECK(*asymptotic_error_bound(0.7, 4.0, kUnit) == doctest::Approx(*asymptotic_error_bound(0.7, 1.0, kUnit) / 8.0));
    CHECK_FALSE(asymptotic_error_bound(NAN, 1.0, kUnit).has_value());
    CHECK_THROWS(asymptotic_error_bound(1.0, 0.0, kUnit));
  }

  TEST_CASE("Gaussian respects the bound at t = 10") {
    const Grid g = Grid::centered(128.0, 4096);
    const ComplexField psi0 = chi_at(g, 0.0);
    CHECK(asymptotic_defect(psi0, 10.0) <= *asymptotic_error_bound(kFam.gamma(0.0) / std::sqrt(2.0), 10.0, kUnit));
  }

  TEST_CASE("square packet respects the bound from its discontinuity instant") {
    const SquareFamily sq(kUnit, 1.0);
    const Grid g = Grid::centered(8.0, 8192);
    const double t = 0.5;
    const ComplexField exact = sample(g, [&](double x) { return square_exact(sq, x, t); });
    const ComplexField approx =
        asymptotic_form(g, [&](double p) { return square_momentum(sq, p); }, 0.0, t, kUnit).field;
    const double measured = sup_abs2_difference(exact, approx);
    CHECK(measured > 0.0);
    CHECK(measured <= *asymptotic_error_bound(1.0 / std::sqrt(12.0), t, kUnit));
  }
}

TEST_SUITE("bound validity") {
  TEST_CASE("no violations for the smooth families over log-spaced times") {
    const Grid g = Grid::centered(256.0, 8192);
    struct Case {
      std::string name;
      ComplexField psi0;
    };
    const std::vector<Case> cases = {
        {"chi", chi_at(g, 0.0)},
        {"chi_1", sample(g, [](double x) { return hermite_gauss(kFam, 1, x, 0.0); })},
        {"derivative n=2", sample(g, [](double x) { return derivative_packet(kFam, 2, x, 0.0); })},
        {"boosted chi", boost(chi_at(g, 0.0), 2.0, kUnit)},
    };
    int violations = 0;
    for (const Case& c : cases) {
      const PacketMoments m0 = moments(c.psi0, kUnit);
      for (double t : log_spaced(1e-3, 30.0, 13)) {
        const double st = short_time_defect(c.psi0, t);
        const double as = asymptotic_defect(c.psi0, t);
        INFO(c.name << " t = " << t << " short " << st << " asym " << as);
        const bool ok = st <= *short_time_error_bound(m0.delta_p, t, kUnit) &&
                        as <= *asymptotic_error_bound(m0.delta_x, t, kUnit);
        CHECK(ok);
        violations += ok ? 0 : 1;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_SUITE("ehrenfest") {
  TEST_CASE("mean position moves uniformly, mean momentum is constant") {
    const Grid g = Grid::centered(128.0, 4096);
    for (double p : {-2.0, 0.5, 3.0}) {
      const ComplexField psi0 =
          boost(sample(g, [](double x) { return derivative_packet(kFam, 2, x - 1.5, 0.0); }), p, kUnit);
      for (double t : {-2.0, 1.0, 5.0}) {
        const PacketMoments m = moments(propagate_spectral(psi0, t, kUnit).field, kUnit);
        CHECK(std::abs(m.mean_x - (1.5 + p * t)) <= 1e-9);
        CHECK(std::abs(m.mean_p - p) <= 1e-9);
      }
    }
  }
}
