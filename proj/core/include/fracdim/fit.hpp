#pragma once

#include <span>
#include <vector>

#include "fracdim/boxcount.hpp"
#include "fracdim/dataset.hpp"
#include "fracdim/grid.hpp"

namespace fracdim {

struct LogLogPoint {
  double x = 0.0;  // log2 r_j = -j, exact
  double y = 0.0;  // log2 S_j
};

/// The box-count plot on log-log axes, one point per level ascending in j.
/// Base-2 logs on both axes keep x integer-valued; the slope is the same in
/// any shared base.
struct LogLogPlot {
  std::vector<LogLogPoint> points;
};

/// Inclusive level window [j_min, j_max] used for the regression.
struct FitRange {
  int j_min = 0;
  int j_max = 0;
};

struct FitResult {
  double slope = 0.0;
  double r_squared = 0.0;
};

LogLogPlot loglog(const BoxCountPlot& plot);

/// Ordinary least squares over the given points. A plot with constant y is
/// treated as a perfect flat line: slope 0, r_squared 1 (that convention is
/// what makes a point-mass dataset report dimension 0 instead of erroring).
FitResult linear_fit(std::span<const LogLogPoint> points);

/// OLS over the levels selected by range. Throws DomainError when the range
/// selects fewer than two points.
FitResult ols_slope(const LogLogPlot& plot, FitRange range);

/// The contiguous window of length >= min_window maximizing r-squared; ties
/// (within 1e-12) go to the longer window, then the smaller j_min.
FitRange select_linear_range(const LogLogPlot& plot, int min_window);

/// How to choose the regression window.
struct FitSpec {
  enum class Mode { Auto, Full, Explicit };

  Mode mode = Mode::Auto;
  int min_window = 4;  // Auto: shrinks to the level count when that is smaller
  FitRange range{};    // Explicit only

  static FitSpec auto_range() { return {}; }
  static FitSpec full_range() { return {Mode::Full, 4, {}}; }
  static FitSpec explicit_range(FitRange r) { return {Mode::Explicit, 4, r}; }
};

/// The fitted correlation dimension: slope over the chosen window of the
/// log-log plot, with its goodness of fit.
struct D2Estimate {
  double d2 = 0.0;
  double r_squared = 0.0;
  FitRange range{};
  Algorithm algorithm = Algorithm::FFD;
  LogLogPlot plot;
};

/// Fits an existing box-count plot.
D2Estimate fit_d2(const BoxCountPlot& plot, const FitSpec& spec = {});

/// Runs the chosen kernel and fits the result. Both kernels produce the
/// identical estimate.
D2Estimate estimate_d2(const NormalizedDataset& data, const RadiusSchedule& schedule,
                       Algorithm algo = Algorithm::FFD, const FitSpec& spec = {});

}  // namespace fracdim
