#include "freepacket/scenario.hpp"

#include "freepacket/evolution.hpp"
#include "freepacket/observables.hpp"
#include "freepacket/packets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <optional>

namespace freepacket {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SummaryRow {
  double t = 0.0;
  double delta_x = kNaN;
  double delta_p = kNaN;
  double mean_x = kNaN;
  double mean_r = kNaN;
  double delta_x_law = kNaN;
  double short_time_bound = kNaN;
  double short_time_error = kNaN;
  double asymptotic_bound = kNaN;
  double asymptotic_error = kNaN;
};

struct Slice {
  ComplexField field;
  SummaryRow row;
};

bool is_spectral(FamilyKind f) { return f != FamilyKind::Square; }

bool rescaled_output(Scenario s) { return s == Scenario::Fig2 || s == Scenario::Fig4; }

ComplexField initial_field(const ScenarioConfig& cfg) {
  const Grid grid = cfg.grid();
  const GaussianFamily fam(cfg.physics, cfg.tau);
  ComplexField psi0 = ComplexField::zeros(grid);
  switch (cfg.family) {
    case FamilyKind::Gaussian:
      psi0 = sample(grid, [&](double x) { return gaussian_chi(fam, x, 0.0); });
      break;
    case FamilyKind::HermiteGauss:
      psi0 = sample(grid, [&](double x) { return hermite_gauss(fam, cfg.order, x, 0.0); });
      break;
    case FamilyKind::Derivative:
      psi0 = sample(grid, [&](double x) { return derivative_packet(fam, cfg.order, x, 0.0); });
      break;
    case FamilyKind::Square: {
      const SquareFamily sq(cfg.physics, cfg.width);
      return sample(grid, [&](double x) { return square_initial(sq, x); });
    }
  }
  if (cfg.boost != 0.0) psi0 = boost(psi0, cfg.boost, cfg.physics);
  return psi0;
}

double optional_or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

std::vector<Slice> spectral_slices(const ScenarioConfig& cfg) {
  const PhysicsParams& params = cfg.physics;
  const ComplexField psi0 = initial_field(cfg);
  const PacketMoments m0 = moments(psi0, params);
  const SpreadLaw law = spread_law_from_state(m0, params, 0.0);
  const ComplexField phi0 = to_momentum(psi0, params);

  const auto compute = [&](double t) {
    Slice slice{propagate_spectral(psi0, t, params).field, {}};
    SummaryRow& row = slice.row;
    row.t = t;
    const PacketMoments mt = moments(slice.field, params);
    row.delta_x = mt.delta_x;
    row.delta_p = mt.delta_p;
    row.mean_x = mt.mean_x;
    row.mean_r = mt.mean_r;
    row.delta_x_law = spread_prediction(law, params, t);
    if (t >= 0.0) {
      row.short_time_bound = optional_or_nan(short_time_error_bound(m0.delta_p, t, params));
      const ComplexField shifted = short_time_approx(psi0, t, params, m0.mean_p).field;
      row.short_time_error = sup_abs2_difference(slice.field, shifted);
    }
    if (t > 0.0) {
      row.asymptotic_bound = optional_or_nan(asymptotic_error_bound(m0.delta_x, t, params));
      const ComplexField asym = asymptotic_form(phi0, m0.mean_x, t, params).field;
      row.asymptotic_error = sup_abs2_difference(slice.field, asym);
    }
    return slice;
  };

  std::vector<std::future<Slice>> jobs;
  for (double t : cfg.times) jobs.push_back(std::async(std::launch::async, compute, t));
  std::vector<Slice> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<Slice> square_slices(const ScenarioConfig& cfg) {
  const PhysicsParams& params = cfg.physics;
  const SquareFamily fam(params, cfg.width);
  const Grid grid = cfg.grid();

  // Moments exist only at the discontinuity instant; delta_p diverges there.
  const PacketMoments m0 =
      refined_moments([&](double x) { return square_initial(fam, x); }, grid, params);

  const auto compute = [&](double t) {
    SummaryRow row;
    row.t = t;
    row.delta_p = std::numeric_limits<double>::infinity();
    if (t == 0.0) {
      row.delta_x = m0.delta_x;
      row.mean_x = m0.mean_x;
      row.mean_r = m0.mean_r;
      row.delta_x_law = m0.delta_x;
      return Slice{sample(grid, [&](double x) { return square_initial(fam, x); }), row};
    }
    Slice slice{sample(grid, [&](double x) { return square_exact(fam, x, t); }), row};
    if (t > 0.0) {
      slice.row.asymptotic_bound = optional_or_nan(asymptotic_error_bound(m0.delta_x, t, params));
      const MomentumFunction phi = [&](double p) { return square_momentum(fam, p); };
      const ComplexField asym = asymptotic_form(grid, phi, 0.0, t, params).field;
      slice.row.asymptotic_error = sup_abs2_difference(slice.field, asym);
    }
    return slice;
  };

  std::vector<std::future<Slice>> jobs;
  for (double t : cfg.times) jobs.push_back(std::async(std::launch::async, compute, t));
  std::vector<Slice> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_slice_csv(const std::filesystem::path& path, const Slice& slice, bool rescaled) {
  std::ofstream out = open_output(path);
  out << "x,re_psi,im_psi,density";
  if (rescaled) out << ",x_over_t,t_times_density";
  out << '\n';
  const double t = slice.row.t;
  for (Index j = 0; j < slice.field.size(); ++j) {
    const double x = slice.field.grid.x(j);
    const Complex v = slice.field.values[j];
    const double density = std::norm(v);
    out << number(x) << ',' << number(v.real()) << ',' << number(v.imag()) << ',' << number(density);
    if (rescaled) {
      const bool defined = t != 0.0;
      out << ',' << number(defined ? x / t : kNaN) << ',' << number(defined ? t * density : kNaN);
    }
    out << '\n';
  }
  finish(out, path);
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<Slice>& slices) {
  std::ofstream out = open_output(path);
  out << "t,delta_x,delta_p,mean_x,mean_r,delta_x_law,short_time_bound,short_time_error,"
         "asymptotic_bound,asymptotic_error\n";
  for (const auto& s : slices) {
    const SummaryRow& r = s.row;
    out << number(r.t) << ',' << number(r.delta_x) << ',' << number(r.delta_p) << ','
        << number(r.mean_x) << ',' << number(r.mean_r) << ',' << number(r.delta_x_law) << ','
        << number(r.short_time_bound) << ',' << number(r.short_time_error) << ','
        << number(r.asymptotic_bound) << ',' << number(r.asymptotic_error) << '\n';
  }
  finish(out, path);
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::vector<Slice>& slices, bool rescaled) {
  struct Curve {
    std::vector<double> u;
    std::vector<double> v;
  };
  std::vector<Curve> curves;
  double vmax = 0.0;
  for (const auto& s : slices) {
    Curve c;
    const double t = s.row.t;
    const bool scale = rescaled && t != 0.0;
    for (Index j = 0; j < s.field.size(); ++j) {
      const double x = s.field.grid.x(j);
      const double d = std::norm(s.field.values[j]);
      c.u.push_back(scale ? x / t : x);
      c.v.push_back(scale ? t * d : d);
      vmax = std::max(vmax, c.v.back());
    }
    curves.push_back(std::move(c));
  }
  if (!(vmax > 0.0)) vmax = 1.0;

  // Horizontal extent: where any curve exceeds 1e-3 of the global peak.
  double umin = std::numeric_limits<double>::infinity();
  double umax = -umin;
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.u.size(); ++i) {
      if (c.v[i] >= 1e-3 * vmax) {
        umin = std::min(umin, c.u[i]);
        umax = std::max(umax, c.u[i]);
      }
    }
  }
  if (!(umax > umin)) {
    umin = -1.0;
    umax = 1.0;
  }
  const double pad = 0.05 * (umax - umin);
  umin -= pad;
  umax += pad;

  constexpr double width = 720.0, height = 440.0, margin = 50.0;
  const auto px = [&](double u) { return margin + (u - umin) / (umax - umin) * (width - 2 * margin); };
  const auto py = [&](double v) { return height - margin - v / (1.05 * vmax) * (height - 2 * margin); };
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::ofstream out = open_output(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title
      << (rescaled ? ": t|psi|^2 vs x/t" : ": |psi|^2 vs x") << "</text>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\"" << width - margin << "\" y2=\""
      << py(0) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height - 20 << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << short_number(umin) << "</text>\n";
  out << "<text x=\"" << width - margin - 40 << "\" y=\"" << height - 20
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << short_number(umax) << "</text>\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const Curve& c = curves[k];
    const std::size_t stride = std::max<std::size_t>(1, c.u.size() / 2000);
    out << "<polyline fill=\"none\" stroke=\"" << colors[k % 10] << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < c.u.size(); i += stride) {
      if (c.u[i] < umin || c.u[i] > umax) continue;
      out << short_number(px(c.u[i])) << ',' << short_number(py(c.v[i])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin - 90 << "\" y=\"" << margin + 16 * k
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << colors[k % 10] << "\">t = "
        << short_number(slices[k].row.t) << "</text>\n";
  }
  out << "</svg>\n";
  finish(out, path);
}

}  // namespace

std::vector<std::string> grid_warnings(const ScenarioConfig& cfg) {
  std::vector<std::string> warnings;
  const Grid grid = cfg.grid();
  const PhysicsParams& params = cfg.physics;

  if (cfg.family == FamilyKind::Square) {
    const double dx0 = cfg.width / std::sqrt(12.0);
    if (cfg.half_width < 10.0 * dx0) {
      warnings.push_back("grid.half_width " + short_number(cfg.half_width) + " is below 10 initial spreads (" +
                         short_number(10.0 * dx0) + ")");
    }
    if (grid.step() > cfg.width / 16.0) {
      warnings.push_back("square packet is resolved by fewer than 16 samples");
    }
    return warnings;
  }

  const ComplexField psi0 = initial_field(cfg);
  const double norm = quadrature_norm2(psi0);
  if (std::abs(norm - 1.0) > 1e-6) {
    warnings.push_back("initial packet is not resolved on the grid (norm^2 = " + short_number(norm) + ")");
    return warnings;
  }
  const PacketMoments m0 = moments(psi0, params);
  if (cfg.half_width < 10.0 * m0.delta_x) {
    warnings.push_back("grid.half_width " + short_number(cfg.half_width) + " is below 10 initial spreads (" +
                       short_number(10.0 * m0.delta_x) + ")");
  }
  const SpreadLaw law = spread_law_from_state(m0, params, 0.0);
  double widest = 0.0;
  double t_widest = 0.0;
  for (double t : cfg.times) {
    const double reach = std::abs(m0.mean_x + m0.mean_p * t / params.mass) + 5.0 * spread_prediction(law, params, t);
    if (reach > widest) {
      widest = reach;
      t_widest = t;
    }
  }
  if (widest > cfg.half_width) {
    warnings.push_back("packet reaches the grid edge by t = " + short_number(t_widest) +
                       "; periodic wraparound will contaminate the result");
  }
  if (grid.momentum_cutoff(params.hbar) < std::abs(m0.mean_p) + 8.0 * m0.delta_p) {
    warnings.push_back("momentum lattice cutoff " + short_number(grid.momentum_cutoff(params.hbar)) +
                       " does not cover 8 momentum spreads");
  }
  return warnings;
}

ScenarioReport run_scenario(const ScenarioConfig& cfg) {
  ScenarioReport report;
  report.warnings = grid_warnings(cfg);

  const std::vector<Slice> slices = is_spectral(cfg.family) ? spectral_slices(cfg) : square_slices(cfg);

  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

  const std::string name = to_string(cfg.scenario);
  const bool rescaled = rescaled_output(cfg.scenario);
  if (cfg.write_csv) {
    for (std::size_t i = 0; i < slices.size(); ++i) {
      const auto path = dir / (name + "_t" + std::to_string(i) + ".csv");
      write_slice_csv(path, slices[i], rescaled);
      report.files.push_back(path);
    }
    const auto summary = dir / (name + "_summary.csv");
    write_summary_csv(summary, slices);
    report.files.push_back(summary);
  }
  if (cfg.write_svg) {
    const auto path = dir / (name + ".svg");
    write_svg(path, name, slices, rescaled);
    report.files.push_back(path);
  }
  return report;
}

}  // namespace freepacket
