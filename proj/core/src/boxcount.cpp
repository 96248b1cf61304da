#include "fracdim/boxcount.hpp"

#include <algorithm>

#include "fracdim/error.hpp"

namespace fracdim {

const char* to_string(Algorithm algo) { return algo == Algorithm::FD ? "fd" : "ffd"; }

namespace {

BoxCountPlot make_plot(const NormalizedDataset& data, const RadiusSchedule& schedule,
                       Algorithm algo) {
  detail::require(schedule.dim() == data.dim, "schedule dimension does not match the dataset");
  BoxCountPlot plot;
  plot.algorithm = algo;
  plot.points = data.size();
  plot.dim = data.dim;
  plot.records.reserve(static_cast<std::size_t>(schedule.levels()));
  return plot;
}

}  // namespace

BoxCountPlot fd(const NormalizedDataset& data, const RadiusSchedule& schedule) {
  BoxCountPlot plot = make_plot(data, schedule, Algorithm::FD);
  for (int j = 1; j <= schedule.levels(); ++j) {
    // one full rescan per level; the previous level's map is already gone
    const OccupancyMap map = occupancies_at_level(data, j, &plot.counters);
    plot.records.push_back({j, schedule.radius(j), map.sum_squared()});
  }
  return plot;
}

BoxCountPlot ffd(const NormalizedDataset& data, const RadiusSchedule& schedule) {
  BoxCountPlot plot = make_plot(data, schedule, Algorithm::FFD);
  const int finest = schedule.levels();
  OccupancyMap map = occupancies_at_level(data, finest, &plot.counters);
  plot.records.push_back({finest, schedule.radius(finest), map.sum_squared()});
  for (int j = finest - 1; j >= 1; --j) {
    map = coarsen(std::move(map), &plot.counters);
    plot.records.push_back({j, schedule.radius(j), map.sum_squared()});
  }
  std::reverse(plot.records.begin(), plot.records.end());
  return plot;
}

}  // namespace fracdim
