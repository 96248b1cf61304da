#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fracdim/dataset.hpp"
#include "fracdim/grid.hpp"

namespace fracdim {

/// Operation counts for one estimation run. These are part of the result,
/// not debug output: the work claims they back are tested.
struct OpCounters {
  std::uint64_t point_cell_updates = 0;  ///< per-point occupancy increments
  std::uint64_t merge_updates = 0;       ///< child-to-parent occupancy additions
  std::uint64_t dataset_scans = 0;       ///< full passes over the dataset

  std::uint64_t total_updates() const { return point_cell_updates + merge_updates; }
};

/// Sparse occupancy of one grid level: only occupied cells are stored, each
/// with its point count. Immutable once built.
///
/// Cells are kept as two parallel arrays, packed key and count, sorted by
/// the bit-interleaved key. That layout makes coarsening a single linear
/// merge of adjacent runs instead of one associative update per cell, which
/// is what keeps the single-pass estimator's runtime flat in the number of
/// levels (see coarsen).
class OccupancyMap {
 public:
  OccupancyMap() = default;

  /// One full dataset scan: every point lands in exactly one cell.
  /// Counters, when given, record N point updates and one scan.
  static OccupancyMap from_points(const NormalizedDataset& data, int level,
                                  OpCounters* counters = nullptr);

  /// Builds a map from explicit (key, count) cells; counts must be >= 1.
  /// Throws DomainError if a sum-of-squares accumulator would overflow.
  static OccupancyMap from_cells(int dim, int level,
                                 std::span<const std::pair<CellKey, std::uint64_t>> cells);

  int dim() const { return dim_; }
  int level() const { return level_; }

  std::size_t cell_count() const { return keys_.size(); }

  /// Sum of all occupancies; equals N for a map built from a dataset scan
  /// or a chain of coarsenings.
  std::uint64_t total_count() const { return total_; }

  /// S = sum of squared occupancies, exact. Accumulated in 64 bits, which
  /// cannot overflow for N <= 2^31; wider inputs are rejected at build time.
  std::uint64_t sum_squared() const { return sum_sq_; }

  /// Occupancy of one cell, 0 when the cell is empty.
  std::uint64_t count_at(const CellKey& key) const;

  std::span<const std::uint64_t> packed_keys() const { return keys_; }
  std::span<const std::uint64_t> counts() const { return counts_; }

  /// Tuple key of the i-th stored cell.
  CellKey key_at(std::size_t i) const;

 private:
  OccupancyMap(int dim, int level) : dim_(dim), level_(level) {}

  friend OccupancyMap coarsen(OccupancyMap&& fine, OpCounters* counters);

  int dim_ = 0;
  int level_ = 0;
  std::vector<std::uint64_t> keys_;    // interleaved cell ids, strictly increasing
  std::vector<std::uint64_t> counts_;  // matching occupancies, every entry >= 1
  std::uint64_t total_ = 0;
  std::uint64_t sum_sq_ = 0;
};

/// Free-function spelling of OccupancyMap::from_points.
inline OccupancyMap occupancies_at_level(const NormalizedDataset& data, int level,
                                         OpCounters* counters = nullptr) {
  return OccupancyMap::from_points(data, level, counters);
}

/// Folds a level-j map into its level-(j-1) parent grid: every occupied fine
/// cell adds its count to its parent cell, one merge update each. Total
/// occupancy is preserved. Requires fine.level() >= 2.
OccupancyMap coarsen(OccupancyMap&& fine, OpCounters* counters = nullptr);
OccupancyMap coarsen(const OccupancyMap& fine, OpCounters* counters = nullptr);

/// Exact sum of squared occupancies.
inline std::uint64_t sum_squared(const OccupancyMap& map) { return map.sum_squared(); }

}  // namespace fracdim
