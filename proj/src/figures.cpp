#include "sqjump/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sqjump {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double grid_point(const Grid& g, int i) {
  return g.start + (g.stop - g.start) * static_cast<double>(i) / (g.count - 1);
}

double frequency_profile(const JumpProtocol& p, double t) {
  if (t < 0.0) return p.omega0;
  if (t <= p.tau) return p.omega1;
  return p.omega0;
}

}  // namespace

FigureId parse_figure_id(const std::string& name) {
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  if (name == "fig5") return FigureId::fig5;
  if (name == "fig6") return FigureId::fig6;
  if (name == "fig7") return FigureId::fig7;
  if (name == "fig8") return FigureId::fig8;
  throw UsageError("unknown figure id '" + name + "' (expected fig2..fig8)");
}

void validate(const SweepSpec& spec) {
  if (spec.grid.count < 2) throw UsageError("sweep grid needs count >= 2");
  if (!(spec.grid.start < spec.grid.stop))
    throw UsageError("sweep grid needs start < stop");
  if (spec.secondary_axis) {
    if (spec.secondary_axis->count < 2)
      throw UsageError("secondary axis needs count >= 2");
    if (!(spec.secondary_axis->start < spec.secondary_axis->stop))
      throw UsageError("secondary axis needs start < stop");
  }
  for (double a : spec.lambda_angles) {
    if (!std::isfinite(a)) throw UsageError("quadrature angles must be finite");
  }
}

namespace {

struct QuantityInfo {
  std::string axis;   // primary-axis column name
  std::string value;  // value column name
};

QuantityInfo info_of(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::r_of_t: return {"omega0_t", "r"};
    case SweepQuantity::variance: return {"omega0_t", "variance"};
    case SweepQuantity::product_of_variances: return {"omega0_t", "variance_product"};
    case SweepQuantity::excitation_probability: return {"tau", "P_E"};
    case SweepQuantity::persistence: return {"tau", "Z"};
    case SweepQuantity::photon_distribution: return {"n", "P"};
    case SweepQuantity::frequency_profile: return {"omega0_t", "omega"};
  }
  throw UsageError("unhandled sweep quantity");
}

double evaluate(const JumpProtocol& p, SweepQuantity q, double x, double lambda) {
  switch (q) {
    case SweepQuantity::r_of_t:
      return squeezing_parameter(p, x / p.omega0);
    case SweepQuantity::variance:
      return variance_at(p, x / p.omega0, lambda);
    case SweepQuantity::product_of_variances:
      return variance_at(p, x / p.omega0, lambda) *
             variance_at(p, x / p.omega0, lambda + kPi / 2.0);
    case SweepQuantity::excitation_probability:
      return excitation_probability(JumpProtocol(p.omega0, p.omega1, x));
    case SweepQuantity::persistence:
      return persistence(JumpProtocol(p.omega0, p.omega1, x));
    case SweepQuantity::photon_distribution:
      return photon_probability(p, static_cast<int>(std::llround(x)));
    case SweepQuantity::frequency_profile:
      return frequency_profile(p, x / p.omega0);
  }
  throw UsageError("unhandled sweep quantity");
}

DataSeries sweep_one(const SweepSpec& spec, const std::string& name, double lambda) {
  const QuantityInfo info = info_of(spec.quantity);
  DataSeries series;
  series.name = name;
  if (spec.secondary_axis) {
    series.columns = {info.axis, "omega1", info.value};
    for (int i = 0; i < spec.grid.count; ++i) {
      const double x = grid_point(spec.grid, i);
      for (int j = 0; j < spec.secondary_axis->count; ++j) {
        const double w1 = grid_point(*spec.secondary_axis, j);
        const JumpProtocol p(spec.protocol.omega0, w1, spec.protocol.tau);
        series.rows.push_back({x, w1, evaluate(p, spec.quantity, x, lambda)});
      }
    }
  } else {
    series.columns = {info.axis, info.value};
    for (int i = 0; i < spec.grid.count; ++i) {
      const double x = grid_point(spec.grid, i);
      series.rows.push_back({x, evaluate(spec.protocol, spec.quantity, x, lambda)});
    }
  }
  return series;
}

bool uses_angle(SweepQuantity q) {
  return q == SweepQuantity::variance || q == SweepQuantity::product_of_variances;
}

}  // namespace

std::vector<DataSeries> run_sweep(const SweepSpec& spec, const std::string& name_stem) {
  validate(spec);
  std::vector<DataSeries> out;
  if (uses_angle(spec.quantity)) {
    std::vector<double> angles = spec.lambda_angles;
    if (angles.empty()) angles.push_back(0.0);
    for (double a : angles) {
      std::string name = name_stem;
      if (angles.size() > 1) name += "_l" + short_number(a);
      out.push_back(sweep_one(spec, name, a));
    }
  } else {
    out.push_back(sweep_one(spec, name_stem, 0.0));
  }
  return out;
}

namespace {

JumpProtocol overridden_protocol(const FigureOverrides& o, double omega1_default,
                                 double tau_default) {
  const double w0 = o.omega0.value_or(1.0);
  return JumpProtocol(w0, o.omega1.value_or(omega1_default * w0),
                      o.tau.value_or(tau_default / w0));
}

}  // namespace

std::vector<DataSeries> figure_series(FigureId id, const FigureOverrides& o) {
  const double w0 = o.omega0.value_or(1.0);
  std::vector<DataSeries> out;

  switch (id) {
    case FigureId::fig2: {
      SweepSpec s;
      s.quantity = SweepQuantity::frequency_profile;
      s.protocol = overridden_protocol(o, 3.0, 5.0 * kPi / 6.0);
      s.grid = {-1.0, s.protocol.tau * w0 + 2.0, o.points.value_or(1000)};
      return run_sweep(s, "fig2_frequency");
    }
    case FigureId::fig3: {
      std::vector<double> omegas;
      if (o.omega1) omegas.push_back(*o.omega1);
      else omegas = {2.0 * w0, 3.0 * w0, 4.0 * w0, 5.0 * w0};
      for (double w1 : omegas) {
        SweepSpec s;
        s.quantity = SweepQuantity::r_of_t;
        s.grid = {0.0, kPi, o.points.value_or(1000)};
        s.protocol = JumpProtocol(w0, w1, o.tau.value_or(s.grid.stop / w0));
        auto series = run_sweep(s, "fig3_omega1_" + short_number(w1));
        out.insert(out.end(), series.begin(), series.end());
      }
      return out;
    }
    case FigureId::fig4: {
      SweepSpec s;
      s.quantity = SweepQuantity::r_of_t;
      s.grid = {0.0, kPi, o.points.value_or(101)};
      s.secondary_axis = Grid{1.0 * w0, 5.0 * w0, o.points.value_or(101)};
      s.protocol = JumpProtocol(w0, o.omega1.value_or(3.0 * w0),
                                o.tau.value_or(s.grid.stop / w0));
      return run_sweep(s, "fig4_r_surface");
    }
    case FigureId::fig5: {
      SweepSpec s;
      s.quantity = SweepQuantity::variance;
      s.grid = {0.0, kPi, o.points.value_or(1000)};
      s.protocol = overridden_protocol(o, 3.0, kPi);
      s.lambda_angles = {0.0};
      auto a = run_sweep(s, "fig5_variance_lambda0");
      s.lambda_angles = {kPi / 2.0};
      auto b = run_sweep(s, "fig5_variance_lambda_half_pi");
      s.quantity = SweepQuantity::product_of_variances;
      s.lambda_angles = {0.0};
      auto c = run_sweep(s, "fig5_variance_product");
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
      out.insert(out.end(), c.begin(), c.end());
      return out;
    }
    case FigureId::fig6:
    case FigureId::fig7: {
      std::vector<double> taus;
      if (o.tau) taus.push_back(*o.tau);
      else taus = {5.0 * kPi / 6.0 / w0, 59.0 * kPi / 62.0 / w0, kPi / w0};
      const char* stem = (id == FigureId::fig6) ? "fig6_tau_" : "fig7_tau_";
      for (double tau : taus) {
        SweepSpec s;
        s.quantity = (id == FigureId::fig6) ? SweepQuantity::r_of_t
                                            : SweepQuantity::variance;
        s.grid = {0.0, 2.0 * kPi, o.points.value_or(1000)};
        s.protocol = JumpProtocol(w0, o.omega1.value_or(3.0 * w0), tau);
        s.lambda_angles = {kPi / 2.0};
        auto series = run_sweep(s, stem + short_number(tau * w0));
        out.insert(out.end(), series.begin(), series.end());
      }
      return out;
    }
    case FigureId::fig8: {
      SweepSpec s;
      s.quantity = SweepQuantity::excitation_probability;
      s.grid = {1e-3, kPi, o.points.value_or(101)};
      s.secondary_axis = Grid{1.0 * w0, 5.0 * w0, o.points.value_or(101)};
      s.protocol = JumpProtocol(w0, o.omega1.value_or(3.0 * w0), 1.0);
      return run_sweep(s, "fig8_pe_surface");
    }
  }
  throw UsageError("unhandled figure id");
}

std::string to_csv(const DataSeries& series) {
  std::ostringstream out;
  for (std::size_t i = 0; i < series.columns.size(); ++i) {
    if (i) out << ',';
    out << series.columns[i];
  }
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#8c564b", "#e377c2"};

}  // namespace

std::string to_svg(const std::vector<DataSeries>& series, const std::string& title) {
  const double width = 860, height = 540;
  const double ml = 70, mr = 20, mt = 40, mb = 50;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series) {
    if (s.columns.size() != 2) continue;  // surfaces are not rendered
    for (const auto& row : s.rows) {
      if (first) {
        xmin = xmax = row[0];
        ymin = ymax = row[1];
        first = false;
      }
      xmin = std::min(xmin, row[0]);
      xmax = std::max(xmax, row[0]);
      ymin = std::min(ymin, row[1]);
      ymax = std::max(ymax, row[1]);
    }
  }
  if (first) return "";  // nothing plottable
  if (ymax == ymin) ymax = ymin + 1.0;
  if (xmax == xmin) xmax = xmin + 1.0;

  const auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  const auto py = [&](double y) {
    return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
      << width - mr << "\" y2=\"" << height - mb
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << ml << "\" y=\"" << height - mb + 20
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << short_number(xmin)
      << "</text>\n";
  out << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 20
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << short_number(xmax) << "</text>\n";
  out << "<text x=\"" << ml - 6 << "\" y=\"" << height - mb
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << short_number(ymin) << "</text>\n";
  out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << short_number(ymax) << "</text>\n";

  int color = 0;
  double legend_y = mt + 10;
  for (const auto& s : series) {
    if (s.columns.size() != 2) continue;
    const char* stroke = kPalette[color % 6];
    out << "<polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : s.rows) {
      out << px(row[0]) << ',' << py(row[1]) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - mr - 8 << "\" y=\"" << legend_y
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
        << "fill=\"" << stroke << "\">" << s.name << "</text>\n";
    legend_y += 16;
    ++color;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sqjump
