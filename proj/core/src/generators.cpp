#include "fracdim/generators.hpp"

#include <string>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr int kBurnIn = 100;

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::next_below(std::uint64_t bound) {
  detail::require(bound >= 1, "next_below: bound must be positive");
  const std::uint64_t excess = (~std::uint64_t{0} % bound + 1) % bound;  // 2^64 mod bound
  if (excess == 0) return next() % bound;
  const std::uint64_t limit = 0 - excess;  // bound * floor(2^64 / bound)
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Sierpinski: return "sierpinski";
    case GeneratorKind::Uniform: return "uniform";
    case GeneratorKind::PointMass: return "point-mass";
    case GeneratorKind::Cantor: return "cantor";
  }
  return "?";
}

RawDataset gen_sierpinski(std::size_t n, std::uint64_t seed) {
  detail::require(n >= 1, "generator needs n >= 1");
  static constexpr double vx[3] = {0.0, 1.0, 0.5};
  static constexpr double vy[3] = {0.0, 0.0, 1.0};

  Rng rng(seed);
  double x = 0.5, y = 0.5;
  RawDataset out;
  out.dim = 2;
  out.coords.reserve(2 * n);
  for (std::size_t i = 0; i < kBurnIn + n; ++i) {
    const std::uint64_t k = rng.next_below(3);
    x = (x + vx[k]) * 0.5;
    y = (y + vy[k]) * 0.5;
    if (i >= kBurnIn) {
      out.coords.push_back(x);
      out.coords.push_back(y);
    }
  }
  return out;
}

RawDataset gen_uniform(std::size_t n, int dim, std::uint64_t seed) {
  detail::require(n >= 1, "generator needs n >= 1");
  detail::require(dim >= 1, "generator needs dim >= 1");
  Rng rng(seed);
  RawDataset out;
  out.dim = dim;
  out.coords.resize(n * static_cast<std::size_t>(dim));
  for (auto& c : out.coords) c = rng.next_double();
  return out;
}

RawDataset gen_point_mass(std::size_t n, int dim) {
  detail::require(n >= 1, "generator needs n >= 1");
  detail::require(dim >= 1, "generator needs dim >= 1");
  RawDataset out;
  out.dim = dim;
  out.coords.assign(n * static_cast<std::size_t>(dim), 0.5);
  return out;
}

RawDataset gen_cantor(std::size_t n, std::uint64_t seed) {
  detail::require(n >= 1, "generator needs n >= 1");
  Rng rng(seed);
  double x = 0.5;
  RawDataset out;
  out.dim = 1;
  out.coords.reserve(n);
  for (std::size_t i = 0; i < kBurnIn + n; ++i) {
    const double third = x / 3.0;
    x = rng.next_below(2) ? third + 2.0 / 3.0 : third;
    if (i >= kBurnIn) out.coords.push_back(x);
  }
  return out;
}

RawDataset generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw DomainError("generator needs n >= 1");
  switch (spec.kind) {
    case GeneratorKind::Sierpinski:
      if (spec.dim != 2) throw DomainError("sierpinski datasets are 2-dimensional");
      return gen_sierpinski(spec.n, spec.seed);
    case GeneratorKind::Cantor:
      if (spec.dim != 1) throw DomainError("cantor datasets are 1-dimensional");
      return gen_cantor(spec.n, spec.seed);
    case GeneratorKind::Uniform:
      if (spec.dim < 1) throw DomainError("uniform datasets need dim >= 1");
      return gen_uniform(spec.n, spec.dim, spec.seed);
    case GeneratorKind::PointMass:
      if (spec.dim < 1) throw DomainError("point-mass datasets need dim >= 1");
      return gen_point_mass(spec.n, spec.dim);
  }
  throw DomainError("unknown generator kind");
}

}  // namespace fracdim
