#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fracdim {

/// A point set as ingested: N points with dim real coordinates each,
/// stored row-major (point i occupies coords[i*dim .. i*dim+dim)).
struct RawDataset {
  std::vector<double> coords;
  int dim = 0;

  std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

enum class NormalizeMode {
  MinMax,       ///< affine map per dimension: min -> 0, max -> 1
  PassThrough,  ///< coordinates must already lie in [0, 1]
};

/// A dataset with every coordinate in [0, 1], ready for grid indexing.
/// provenance holds the per-dimension (min, max) the normalization used.
struct NormalizedDataset {
  std::vector<double> coords;
  int dim = 0;
  std::vector<std::pair<double, double>> provenance;

  std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Maps a raw dataset into the unit cube. A dimension whose values are all
/// equal carries no spatial information and maps to 0. Throws DomainError on
/// an empty or malformed dataset, a non-finite coordinate, or (in
/// PassThrough mode) a coordinate outside [0, 1].
NormalizedDataset normalize(const RawDataset& raw, NormalizeMode mode = NormalizeMode::MinMax);

}  // namespace fracdim
