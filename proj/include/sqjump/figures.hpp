#ifndef SQJUMP_FIGURES_HPP
#define SQJUMP_FIGURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqjump/protocol.hpp"

namespace sqjump {

enum class FigureId { fig2, fig3, fig4, fig5, fig6, fig7, fig8 };

/// "fig2".."fig8"; UsageError otherwise.
FigureId parse_figure_id(const std::string& name);

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 1000;
};

enum class SweepQuantity {
  r_of_t,
  variance,
  product_of_variances,
  excitation_probability,
  persistence,
  photon_distribution,
  frequency_profile,
};

/// One requested data series: a quantity evaluated on a grid, optionally
/// against a second omega1 axis (long-format surface output).
struct SweepSpec {
  SweepQuantity quantity = SweepQuantity::r_of_t;
  JumpProtocol protocol{1.0, 3.0, 1.0};
  Grid grid;                         // primary axis (omega0*t, tau, or n)
  std::optional<Grid> secondary_axis;  // swept over omega1
  std::vector<double> lambda_angles;   // for variance-type quantities
};

/// Validates a spec (count >= 2, start < stop, finite angles); UsageError
/// on violation.
void validate(const SweepSpec& spec);

struct DataSeries {
  std::string name;                   // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluate one sweep; variance-type quantities yield one series per angle.
std::vector<DataSeries> run_sweep(const SweepSpec& spec,
                                  const std::string& name_stem);

struct FigureOverrides {
  std::optional<double> omega0;
  std::optional<double> omega1;
  std::optional<double> tau;
  std::optional<int> points;
};

/// The per-figure defaults (omega0 = 1 throughout):
///   fig2  frequency profile omega(t)
///   fig3  r(t) on (0, pi], one curve per omega1 in {2, 3, 4, 5}
///   fig4  surface r(omega0*t, omega1), long format
///   fig5  variances at lambda = 0 and pi/2 plus their product, omega1 = 3
///   fig6  r(t) across both jumps for tau in {5pi/6, 59pi/62, pi}, omega1 = 3
///   fig7  (Delta Q_{pi/2})^2 for the same tau set, omega1 = 3
///   fig8  surface P_E(tau, omega1), long format
std::vector<DataSeries> figure_series(FigureId id, const FigureOverrides& o);

/// RFC-4180-style CSV: header row, '.' decimals, 17 significant digits,
/// LF line endings.  Byte-stable for fixed inputs.
std::string to_csv(const DataSeries& series);

/// Cosmetic line plot of 2-column series (surfaces are not rendered).
std::string to_svg(const std::vector<DataSeries>& series,
                   const std::string& title);

}  // namespace sqjump

#endif
