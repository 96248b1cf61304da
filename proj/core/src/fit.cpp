#include "fracdim/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdim/error.hpp"

namespace fracdim {

LogLogPlot loglog(const BoxCountPlot& plot) {
  LogLogPlot out;
  out.points.reserve(plot.records.size());
  for (const auto& rec : plot.records) {
    detail::require(rec.sum_squared >= 1, "loglog: S must be positive");
    // log2(1/2^j) is -j exactly; S is converted once and logged
    out.points.push_back({-static_cast<double>(rec.level),
                          std::log2(static_cast<double>(rec.sum_squared))});
  }
  return out;
}

FitResult linear_fit(std::span<const LogLogPoint> points) {
  detail::require(points.size() >= 2, "linear_fit: need at least two points");

  // exactly constant y is a perfect flat line by convention
  bool constant = true;
  for (const auto& p : points) constant = constant && p.y == points[0].y;
  if (constant) return {0.0, 1.0};

  const double n = static_cast<double>(points.size());
  double x_mean = 0.0, y_mean = 0.0;
  for (const auto& p : points) {
    x_mean += p.x;
    y_mean += p.y;
  }
  x_mean /= n;
  y_mean /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - x_mean;
    const double dy = p.y - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  detail::require(sxx > 0.0, "linear_fit: x values must not all coincide");

  const double slope = sxy / sxx;
  double sse = 0.0;
  const double intercept = y_mean - slope * x_mean;
  for (const auto& p : points) {
    const double resid = p.y - (intercept + slope * p.x);
    sse += resid * resid;
  }
  const double r2 = std::clamp(1.0 - sse / syy, 0.0, 1.0);
  return {slope, r2};
}

namespace {

std::span<const LogLogPoint> window(const LogLogPlot& plot, FitRange range) {
  return std::span<const LogLogPoint>(plot.points)
      .subspan(static_cast<std::size_t>(range.j_min - 1),
               static_cast<std::size_t>(range.j_max - range.j_min + 1));
}

}  // namespace

FitResult ols_slope(const LogLogPlot& plot, FitRange range) {
  const int levels = static_cast<int>(plot.points.size());
  if (range.j_min < 1 || range.j_max > levels || range.j_min >= range.j_max)
    throw DomainError("fit range " + std::to_string(range.j_min) + ".." +
                      std::to_string(range.j_max) + " does not select two or more of " +
                      std::to_string(levels) + " levels");
  return linear_fit(window(plot, range));
}

FitRange select_linear_range(const LogLogPlot& plot, int min_window) {
  const int levels = static_cast<int>(plot.points.size());
  detail::require(min_window >= 2 && min_window <= levels,
                  "select_linear_range: window must be in [2, levels]");

  // r-squared values within this distance count as tied; ties go to the
  // longer window, then to the smaller j_min
  constexpr double kTie = 1e-12;

  double best_r2 = -1.0;
  for (int lo = 1; lo + min_window - 1 <= levels; ++lo)
    for (int hi = lo + min_window - 1; hi <= levels; ++hi)
      best_r2 = std::max(best_r2, ols_slope(plot, {lo, hi}).r_squared);

  for (int length = levels; length >= min_window; --length)
    for (int lo = 1; lo + length - 1 <= levels; ++lo) {
      const FitRange range{lo, lo + length - 1};
      if (ols_slope(plot, range).r_squared >= best_r2 - kTie) return range;
    }
  detail::require(false, "select_linear_range: no window found");
  return {};
}

D2Estimate fit_d2(const BoxCountPlot& plot, const FitSpec& spec) {
  LogLogPlot llp = loglog(plot);
  const int levels = static_cast<int>(llp.points.size());
  detail::require(levels >= 2, "fit_d2: need at least two levels");

  FitRange range{};
  switch (spec.mode) {
    case FitSpec::Mode::Full:
      range = {1, levels};
      break;
    case FitSpec::Mode::Explicit:
      range = spec.range;
      break;
    case FitSpec::Mode::Auto:
      range = select_linear_range(llp, std::clamp(spec.min_window, 2, levels));
      break;
  }

  const FitResult fit = ols_slope(llp, range);
  return {fit.slope, fit.r_squared, range, plot.algorithm, std::move(llp)};
}

D2Estimate estimate_d2(const NormalizedDataset& data, const RadiusSchedule& schedule,
                       Algorithm algo, const FitSpec& spec) {
  const BoxCountPlot plot = algo == Algorithm::FD ? fd(data, schedule) : ffd(data, schedule);
  return fit_d2(plot, spec);
}

}  // namespace fracdim
