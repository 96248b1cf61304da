#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "fracdim/error.hpp"

namespace fracdim {

/// The grid resolutions used for box-counting: cell side r_j = 1/2^j for
/// j = 1..levels, level 1 being the coarsest grid. Construction rejects
/// schedules with fewer than two levels (a slope needs two plot points) and
/// schedules whose finest grid would not fit a 64-bit cell id
/// (dim * levels > 64).
class RadiusSchedule {
 public:
  static constexpr int kMaxKeyBits = 64;

  RadiusSchedule(int levels, int dim);

  int levels() const { return levels_; }
  int dim() const { return dim_; }

  /// Cell side at a level, exactly 1/2^level.
  double radius(int level) const;

 private:
  int levels_;
  int dim_;
};

/// Per-dimension integer cell indices at some grid level; index d lies in
/// [0, 2^level). The tuple form never overflows and is the canonical key;
/// row_major_id is a derived view.
using CellKey = std::vector<std::uint64_t>;

/// Cell containing a point of the unit cube at the given level:
/// index_d = floor(coordinate_d * 2^level), with coordinates of exactly 1.0
/// clamped into the last cell. Requires 1 <= level <= 64 and coordinates in
/// [0, 1].
CellKey cell_index(std::span<const double> point, int level);

/// The level-(level-1) cell containing a level-`level` cell: every index
/// halved. Requires level >= 2 (the coarsest grid has no parent).
CellKey parent_key(const CellKey& key, int level);

/// Row-major linear cell id: sum of index_d * (2^level)^(E-1-d), a bijection
/// from level keys onto [0, 2^(E*level)). Throws DomainError when
/// E * level > 64; callers should use the tuple key directly then.
std::uint64_t row_major_id(const CellKey& key, int level);

namespace detail {

/// Largest valid per-dimension index at a level, 2^level - 1.
inline std::uint64_t level_mask(int level) {
  return level >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << level) - 1;
}

/// floor(c * 2^level) clamped into [0, 2^level). Scaling by a power of two
/// is exact, so the result is the true floor for any representable c.
inline std::uint64_t coordinate_index(double c, int level) {
  if (c <= 0.0) return 0;
  const std::uint64_t mask = level_mask(level);
  if (c >= 1.0) return mask;
  return static_cast<std::uint64_t>(std::ldexp(c, level));
}

/// Bit-interleaved packed cell id (bit b of dimension d lands at position
/// b*dim + (dim-1-d)). Two properties the occupancy kernels rely on:
/// the parent cell's id is `id >> dim`, and sorting by id places sibling
/// cells adjacently. Requires dim * level <= 64.
std::uint64_t interleave_indices(const std::uint64_t* indices, int dim, int level);

/// Packed id of the cell containing a point; fused index + interleave.
std::uint64_t packed_cell_key(std::span<const double> point, int level);

/// Inverse of interleave_indices.
CellKey unpack_key(std::uint64_t packed, int dim, int level);

}  // namespace detail
}  // namespace fracdim
