#pragma once

#include <cstdint>
#include <vector>

#include "fracdim/dataset.hpp"
#include "fracdim/grid.hpp"
#include "fracdim/occupancy.hpp"

namespace fracdim {

enum class Algorithm {
  FD,   ///< multi-scan: rebuilds the grid from the dataset at every level
  FFD,  ///< single-pass: scans once at the finest level, then coarsens
};

const char* to_string(Algorithm algo);

struct LevelRecord {
  int level = 0;                  // j
  double radius = 0.0;            // r_j = 1/2^j
  std::uint64_t sum_squared = 0;  // S_j
};

/// Per-level (r, S) records plus the operation counters of the run that
/// produced them. Records are always sorted by level ascending, whatever
/// order the algorithm visited them in.
struct BoxCountPlot {
  std::vector<LevelRecord> records;
  OpCounters counters;
  Algorithm algorithm = Algorithm::FFD;
  std::size_t points = 0;  // N
  int dim = 0;             // E
};

/// Rescans the dataset once per level, holding a single level's occupancy
/// map at a time. Counters: N*levels point updates, `levels` scans, no
/// merges.
BoxCountPlot fd(const NormalizedDataset& data, const RadiusSchedule& schedule);

/// Scans the dataset exactly once, at the finest level, then derives every
/// coarser level by merging child cells into parents. At most two levels'
/// maps are alive at any moment. Produces bit-identical S values to fd.
BoxCountPlot ffd(const NormalizedDataset& data, const RadiusSchedule& schedule);

}  // namespace fracdim
