#include "fracdim/dataset.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

void check_shape(const RawDataset& raw) {
  if (raw.dim < 1) throw DomainError("dataset dimension must be at least 1");
  if (raw.coords.size() % static_cast<std::size_t>(raw.dim) != 0)
    throw DomainError("coordinate buffer is not a multiple of the dimension");
  if (raw.coords.empty()) throw DomainError("empty dataset");
}

[[noreturn]] void throw_at(const char* what, std::size_t point, int dim) {
  throw DomainError(std::string(what) + " at point " + std::to_string(point + 1) +
                    ", dimension " + std::to_string(dim + 1));
}

}  // namespace

NormalizedDataset normalize(const RawDataset& raw, NormalizeMode mode) {
  check_shape(raw);
  const std::size_t n = raw.size();
  const int dim = raw.dim;

  for (std::size_t i = 0; i < n; ++i) {
    const auto p = raw.point(i);
    for (int d = 0; d < dim; ++d)
      if (!std::isfinite(p[d])) throw_at("non-finite coordinate", i, d);
  }

  NormalizedDataset out;
  out.dim = dim;

  if (mode == NormalizeMode::PassThrough) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = raw.point(i);
      for (int d = 0; d < dim; ++d)
        if (p[d] < 0.0 || p[d] > 1.0) throw_at("coordinate outside [0, 1]", i, d);
    }
    out.coords = raw.coords;
    out.provenance.assign(dim, {0.0, 1.0});
    return out;
  }

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = raw.point(i);
    for (int d = 0; d < dim; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  }

  out.coords.resize(raw.coords.size());
  out.provenance.reserve(dim);
  for (int d = 0; d < dim; ++d) out.provenance.emplace_back(lo[d], hi[d]);

  for (std::size_t i = 0; i < n; ++i) {
    const auto p = raw.point(i);
    double* q = out.coords.data() + i * static_cast<std::size_t>(dim);
    for (int d = 0; d < dim; ++d) {
      const double range = hi[d] - lo[d];
      // a constant dimension maps to 0 rather than erroring
      q[d] = range > 0.0 ? (p[d] - lo[d]) / range : 0.0;
    }
  }
  return out;
}

}  // namespace fracdim
