#pragma once

#include <array>
#include <cstdint>

#include "fracdim/dataset.hpp"

namespace fracdim {

/// xoshiro256++ seeded through splitmix64. The generator is pinned here --
/// not taken from the standard library, whose distributions vary between
/// implementations -- so a (kind, n, seed) triple reproduces the same bytes
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0, 1), 53 random bits, exact scaling.
  double next_double();

  /// Uniform in [0, bound), unbiased (rejection sampling). bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> state_;
};

enum class GeneratorKind { Sierpinski, Uniform, PointMass, Cantor };

const char* to_string(GeneratorKind kind);

/// Seeded synthetic dataset request. Sierpinski is 2-D and Cantor 1-D by
/// construction; `dim` must agree for those kinds.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Uniform;
  std::size_t n = 0;
  int dim = 2;
  std::uint64_t seed = 0;
};

/// Chaos game towards the Sierpinski triangle with vertices (0,0), (1,0),
/// (0.5,1): state <- (state + vertex)/2, vertex drawn uniformly. The first
/// 100 iterates are discarded; the next n are emitted. Expected correlation
/// dimension log(3)/log(2) ~= 1.585.
RawDataset gen_sierpinski(std::size_t n, std::uint64_t seed);

/// n points with every coordinate uniform in [0, 1).
RawDataset gen_uniform(std::size_t n, int dim, std::uint64_t seed);

/// n copies of (0.5, ..., 0.5); dimension 0 by construction.
RawDataset gen_point_mass(std::size_t n, int dim);

/// Chaos game on x/3 and x/3 + 2/3 (middle-thirds Cantor dust), burn-in
/// 100. Expected correlation dimension log(2)/log(3) ~= 0.6309.
RawDataset gen_cantor(std::size_t n, std::uint64_t seed);

/// Dispatch on spec.kind; validates n >= 1 and the kind/dim combination.
RawDataset generate(const GeneratorSpec& spec);

}  // namespace fracdim
