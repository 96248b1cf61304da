#include "fracdim/grid.hpp"

#include <cassert>
#include <string>

namespace fracdim {

RadiusSchedule::RadiusSchedule(int levels, int dim) : levels_(levels), dim_(dim) {
  if (levels < 2) throw DomainError("a radius schedule needs at least 2 levels");
  if (dim < 1) throw DomainError("grid dimension must be at least 1");
  if (static_cast<long long>(dim) * levels > kMaxKeyBits)
    throw DomainError("schedule too fine: dim * levels = " + std::to_string(dim) + " * " +
                      std::to_string(levels) + " exceeds " + std::to_string(kMaxKeyBits) +
                      " cell-id bits");
}

double RadiusSchedule::radius(int level) const {
  detail::require(level >= 1 && level <= levels_, "level outside the schedule");
  return std::ldexp(1.0, -level);
}

CellKey cell_index(std::span<const double> point, int level) {
  detail::require(level >= 1 && level <= 64, "cell_index: level must be in [1, 64]");
  CellKey key(point.size());
  for (std::size_t d = 0; d < point.size(); ++d) {
    detail::require(point[d] >= 0.0 && point[d] <= 1.0,
                    "cell_index: coordinate outside the unit cube");
    key[d] = detail::coordinate_index(point[d], level);
  }
  return key;
}

CellKey parent_key(const CellKey& key, int level) {
  detail::require(level >= 2, "parent_key: the coarsest grid has no parent");
  CellKey parent(key.size());
  for (std::size_t d = 0; d < key.size(); ++d) parent[d] = key[d] >> 1;
  return parent;
}

std::uint64_t row_major_id(const CellKey& key, int level) {
  detail::require(!key.empty(), "row_major_id: empty key");
  detail::require(level >= 1 && level <= 64, "row_major_id: level must be in [1, 64]");
  const int dim = static_cast<int>(key.size());
  if (static_cast<long long>(dim) * level > 64)
    throw DomainError("row-major id does not fit 64 bits at dim " + std::to_string(dim) +
                      ", level " + std::to_string(level) + "; use the tuple key");
  const std::uint64_t mask = detail::level_mask(level);
  std::uint64_t id = 0;
  for (int d = 0; d < dim; ++d) {
    detail::require(key[d] <= mask, "row_major_id: index outside the level grid");
    if (d > 0) id <<= level;  // dim >= 2 implies level <= 32 here
    id += key[d];
  }
  return id;
}

namespace detail {

namespace {

// spreads the low 32 bits of v so bit b lands at position 2b
inline std::uint64_t spread2(std::uint64_t v) {
  v &= 0xffffffffULL;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

}  // namespace

std::uint64_t interleave_indices(const std::uint64_t* indices, int dim, int level) {
  assert(dim >= 1 && level >= 1 && dim * level <= 64);
  if (dim == 1) return indices[0];
  if (dim == 2) return (spread2(indices[0]) << 1) | spread2(indices[1]);
  std::uint64_t out = 0;
  for (int b = 0; b < level; ++b)
    for (int d = 0; d < dim; ++d)
      out |= ((indices[d] >> b) & 1ULL) << (b * dim + (dim - 1 - d));
  return out;
}

std::uint64_t packed_cell_key(std::span<const double> point, int level) {
  const int dim = static_cast<int>(point.size());
  if (dim == 1) return coordinate_index(point[0], level);
  if (dim == 2)
    return (spread2(coordinate_index(point[0], level)) << 1) |
           spread2(coordinate_index(point[1], level));
  std::uint64_t indices[64];
  for (int d = 0; d < dim; ++d) indices[d] = coordinate_index(point[d], level);
  return interleave_indices(indices, dim, level);
}

CellKey unpack_key(std::uint64_t packed, int dim, int level) {
  assert(dim >= 1 && level >= 1 && dim * level <= 64);
  CellKey key(dim, 0);
  if (dim == 1) {
    key[0] = packed;
    return key;
  }
  for (int b = 0; b < level; ++b)
    for (int d = 0; d < dim; ++d)
      key[d] |= ((packed >> (b * dim + (dim - 1 - d))) & 1ULL) << b;
  return key;
}

}  // namespace detail
}  // namespace fracdim
