// Shared helpers for the unit tests: independent brute-force oracles the
// production kernels are checked against, and seeded random datasets.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "fracdim/dataset.hpp"
#include "fracdim/generators.hpp"
#include "fracdim/grid.hpp"

namespace testsupport {

// Floor-indexes every point by hand into an ordered map. Deliberately
// shares nothing with OccupancyMap: no packing, no sorting, no run
// aggregation.
inline std::map<std::vector<std::uint64_t>, std::uint64_t> brute_occupancies(
    const fracdim::NormalizedDataset& data, int level) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> cells;
  const double scale = std::ldexp(1.0, level);
  const std::uint64_t max_index = (std::uint64_t{1} << level) - 1;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto p = data.point(i);
    std::vector<std::uint64_t> key(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) {
      double scaled = std::floor(p[d] * scale);
      auto idx = static_cast<std::uint64_t>(scaled);
      if (idx > max_index) idx = max_index;
      key[d] = idx;
    }
    cells[key] += 1;
  }
  return cells;
}

inline std::uint64_t brute_sum_squared(const fracdim::NormalizedDataset& data, int level) {
  std::uint64_t s = 0;
  for (const auto& [key, count] : brute_occupancies(data, level)) s += count * count;
  return s;
}

inline std::vector<std::uint64_t> brute_s_sequence(const fracdim::NormalizedDataset& data,
                                                   int levels) {
  std::vector<std::uint64_t> s;
  for (int j = 1; j <= levels; ++j) s.push_back(brute_sum_squared(data, j));
  return s;
}

// Random dataset in the unit cube. When snap_bits > 0, a third of the
// points are snapped to a 2^snap_bits lattice so cells collide and the
// merge paths actually merge.
inline fracdim::RawDataset random_raw(fracdim::Rng& rng, std::size_t n, int dim,
                                      int snap_bits = 0) {
  fracdim::RawDataset raw;
  raw.dim = dim;
  raw.coords.reserve(n * static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    const bool snap = snap_bits > 0 && rng.next_below(3) == 0;
    for (int d = 0; d < dim; ++d) {
      double c = rng.next_double();
      if (snap) {
        const double cells = std::ldexp(1.0, snap_bits);
        c = std::floor(c * cells) / cells;
      }
      raw.coords.push_back(c);
    }
  }
  return raw;
}

inline fracdim::NormalizedDataset unit_points(std::vector<double> coords, int dim) {
  fracdim::RawDataset raw;
  raw.coords = std::move(coords);
  raw.dim = dim;
  return fracdim::normalize(raw, fracdim::NormalizeMode::PassThrough);
}

}  // namespace testsupport
