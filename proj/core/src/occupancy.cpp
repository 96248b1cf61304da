#include "fracdim/occupancy.hpp"

#include <algorithm>
#include <cassert>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("occupancy accumulator overflow");
  return r;
}

inline std::uint64_t checked_square(std::uint64_t c) {
  std::uint64_t r;
  if (__builtin_mul_overflow(c, c, &r))
    throw DomainError("sum of squared occupancies overflows 64 bits");
  return r;
}

}  // namespace

OccupancyMap OccupancyMap::from_points(const NormalizedDataset& data, int level,
                                       OpCounters* counters) {
  detail::require(level >= 1 && level <= 64, "occupancy level must be in [1, 64]");
  detail::require(data.dim >= 1 && static_cast<long long>(data.dim) * level <= 64,
                  "occupancy grid does not fit 64-bit cell ids");
  const std::size_t n = data.size();

  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = detail::packed_cell_key(data.point(i), level);
  std::sort(keys.begin(), keys.end());

  OccupancyMap map(data.dim, level);
  if (n != 0) {
    std::size_t runs = 1;
    for (std::size_t i = 1; i < n; ++i) runs += keys[i] != keys[i - 1];
    map.keys_.resize(runs);
    map.counts_.resize(runs);

    std::size_t w = 0;
    std::uint64_t current = keys[0];
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (keys[i] != current) {
        map.keys_[w] = current;
        map.counts_[w] = count;
        map.sum_sq_ = checked_add(map.sum_sq_, checked_square(count));
        ++w;
        current = keys[i];
        count = 0;
      }
      ++count;
    }
    map.keys_[w] = current;
    map.counts_[w] = count;
    map.sum_sq_ = checked_add(map.sum_sq_, checked_square(count));
    map.total_ = n;
  }

  if (counters) {
    counters->point_cell_updates += n;
    counters->dataset_scans += 1;
  }
  return map;
}

OccupancyMap OccupancyMap::from_cells(int dim, int level,
                                      std::span<const std::pair<CellKey, std::uint64_t>> cells) {
  detail::require(dim >= 1 && level >= 1 && static_cast<long long>(dim) * level <= 64,
                  "occupancy grid does not fit 64-bit cell ids");
  const std::uint64_t mask = detail::level_mask(level);

  std::vector<std::uint64_t> packed;
  packed.reserve(cells.size());
  for (const auto& [key, count] : cells) {
    detail::require(static_cast<int>(key.size()) == dim, "cell key has the wrong dimension");
    detail::require(count >= 1, "occupancy counts must be positive");
    for (auto idx : key)
      detail::require(idx <= mask, "cell index outside the level grid");
    packed.push_back(detail::interleave_indices(key.data(), dim, level));
  }

  std::vector<std::size_t> order(packed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return packed[a] < packed[b]; });

  OccupancyMap map(dim, level);
  map.keys_.reserve(packed.size());
  map.counts_.reserve(packed.size());
  for (std::size_t i : order) {
    const std::uint64_t count = cells[i].second;
    if (!map.keys_.empty() && map.keys_.back() == packed[i]) {
      map.counts_.back() = checked_add(map.counts_.back(), count);
    } else {
      map.keys_.push_back(packed[i]);
      map.counts_.push_back(count);
    }
    map.total_ = checked_add(map.total_, count);
  }
  for (std::uint64_t c : map.counts_) map.sum_sq_ = checked_add(map.sum_sq_, checked_square(c));
  return map;
}

std::uint64_t OccupancyMap::count_at(const CellKey& key) const {
  detail::require(static_cast<int>(key.size()) == dim_, "cell key has the wrong dimension");
  const std::uint64_t packed = detail::interleave_indices(key.data(), dim_, level_);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), packed);
  if (it == keys_.end() || *it != packed) return 0;
  return counts_[static_cast<std::size_t>(it - keys_.begin())];
}

CellKey OccupancyMap::key_at(std::size_t i) const {
  detail::require(i < keys_.size(), "cell index out of range");
  return detail::unpack_key(keys_[i], dim_, level_);
}

OccupancyMap coarsen(OccupancyMap&& fine, OpCounters* counters) {
  detail::require(fine.level_ >= 2, "coarsen: the coarsest grid has no parent");
  const int shift = fine.dim_;
  const std::size_t n = fine.keys_.size();
  if (counters) counters->merge_updates += n;

  // Children of one parent are adjacent in key order, so folding a level is
  // a single forward pass; writes trail reads, which lets the map's own
  // storage be reused.
  std::uint64_t total = 0;
  std::uint64_t sum_sq = 0;
  std::size_t w = 0;
  if (n != 0) {
    std::uint64_t parent = fine.keys_[0] >> shift;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = fine.keys_[i] >> shift;
      if (p != parent) {
        fine.keys_[w] = parent;
        fine.counts_[w] = count;
        total = checked_add(total, count);
        sum_sq = checked_add(sum_sq, checked_square(count));
        ++w;
        parent = p;
        count = 0;
      }
      count = checked_add(count, fine.counts_[i]);
    }
    fine.keys_[w] = parent;
    fine.counts_[w] = count;
    total = checked_add(total, count);
    sum_sq = checked_add(sum_sq, checked_square(count));
    ++w;
  }

  fine.keys_.resize(w);
  fine.counts_.resize(w);
  fine.level_ -= 1;
  fine.total_ = total;
  fine.sum_sq_ = sum_sq;
  return std::move(fine);
}

OccupancyMap coarsen(const OccupancyMap& fine, OpCounters* counters) {
  OccupancyMap copy = fine;
  return coarsen(std::move(copy), counters);
}

}  // namespace fracdim
