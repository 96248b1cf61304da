#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracdim/error.hpp"
#include "fracdim/fit.hpp"
#include "fracdim/generators.hpp"

using namespace fracdim;

namespace {

bool same_bits(const RawDataset& a, const RawDataset& b) {
  return a.dim == b.dim && a.coords == b.coords;
}

void check_first_points(const RawDataset& data, const std::vector<std::vector<double>>& expected) {
  REQUIRE(data.size() >= expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto p = data.point(i);
    REQUIRE(p.size() == expected[i].size());
    for (std::size_t d = 0; d < expected[i].size(); ++d) CHECK(p[d] == expected[i][d]);
  }
}

}  // namespace

TEST_CASE("generators are deterministic per (kind, n, dim, seed)") {
  CHECK(same_bits(gen_sierpinski(500, 99), gen_sierpinski(500, 99)));
  CHECK(same_bits(gen_uniform(500, 3, 99), gen_uniform(500, 3, 99)));
  CHECK(same_bits(gen_cantor(500, 99), gen_cantor(500, 99)));
  CHECK_FALSE(same_bits(gen_uniform(500, 3, 99), gen_uniform(500, 3, 100)));
}

TEST_CASE("output sizes are exact") {
  CHECK(gen_sierpinski(17, 1).size() == 17);
  CHECK(gen_uniform(17, 5, 1).size() == 17);
  CHECK(gen_point_mass(17, 3).size() == 17);
  CHECK(gen_cantor(17, 1).size() == 17);
}

// Pinned first points guard cross-platform and refactoring drift in the
// generator chain (splitmix64 seeding, xoshiro256++, rejection sampling,
// the chaos-game update order).
TEST_CASE("sierpinski fixture reproduces its pinned prefix") {
  check_first_points(gen_sierpinski(10, 1), {
      {0.44152698996841677, 0.7560888901356658},
      {0.22076349498420839, 0.3780444450678329},
      {0.11038174749210419, 0.18902222253391646},
      {0.5551908737460521, 0.09451111126695823},
      {0.27759543687302607, 0.047255555633479114},
      {0.638797718436513, 0.023627777816739557},
      {0.3193988592182565, 0.011813888908369779},
      {0.6596994296091283, 0.005906944454184889},
      {0.32984971480456415, 0.0029534722270924446},
      {0.6649248574022821, 0.0014767361135462223},
  });
}

TEST_CASE("uniform fixture reproduces its pinned prefix") {
  check_first_points(gen_uniform(10, 2, 1), {
      {0.8116121588818848, 0.7471047161582187},
      {0.10015090353378375, 0.7462168706168104},
      {0.18467857211916938, 0.5904788847320792},
      {0.9868740786414067, 0.5234168639903058},
      {0.0966018259179694, 0.13429378204468956},
      {0.9203805313125595, 0.34350102339469746},
      {0.07243173322918839, 0.39458050181411974},
      {0.08949692520153907, 0.15634695649001407},
      {0.5571331433884698, 0.47290342153152365},
      {0.9578935103856804, 0.6422557051414516},
  });
}

TEST_CASE("cantor fixture reproduces its pinned prefix") {
  check_first_points(gen_cantor(10, 1), {
      {0.9880721228240695},
      {0.32935737427468986},
      {0.10978579142489663},
      {0.036595263808298875},
      {0.012198421269432958},
      {0.670732807089811},
      {0.22357760236327032},
      {0.07452586745442344},
      {0.024841955818141147},
      {0.6749473186060471},
  });
}

TEST_CASE("every sierpinski point is the midpoint of its predecessor and a vertex") {
  const RawDataset data = gen_sierpinski(2000, 4);
  const double vx[3] = {0.0, 1.0, 0.5};
  const double vy[3] = {0.0, 0.0, 1.0};
  for (std::size_t i = 1; i < data.size(); ++i) {
    const auto prev = data.point(i - 1);
    const auto cur = data.point(i);
    bool midpoint_of_some_vertex = false;
    for (int k = 0; k < 3; ++k)
      midpoint_of_some_vertex = midpoint_of_some_vertex ||
                                (cur[0] == (prev[0] + vx[k]) * 0.5 &&
                                 cur[1] == (prev[1] + vy[k]) * 0.5);
    CHECK(midpoint_of_some_vertex);
  }
}

TEST_CASE("sierpinski points stay inside the triangle hull") {
  const RawDataset data = gen_sierpinski(2000, 8);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto p = data.point(i);
    CHECK(p[1] >= 0.0);
    CHECK(2.0 * p[0] - p[1] >= 0.0);          // left edge
    CHECK(2.0 * (1.0 - p[0]) - p[1] >= 0.0);  // right edge
  }
}

TEST_CASE("uniform coordinates lie in [0, 1) with the expected mean") {
  const std::size_t n = 100000;
  const RawDataset data = gen_uniform(n, 2, 21);
  double sum[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = data.point(i);
    for (int d = 0; d < 2; ++d) {
      CHECK(p[d] >= 0.0);
      CHECK(p[d] < 1.0);
      sum[d] += p[d];
    }
  }
  for (int d = 0; d < 2; ++d) {
    const double mean = sum[d] / static_cast<double>(n);
    CHECK(std::abs(mean - 0.5) <= 0.005);  // 3 sigma, sigma = 1/sqrt(12n)
  }
}

TEST_CASE("point mass is n copies of the cube center") {
  const RawDataset data = gen_point_mass(50, 3);
  for (std::size_t i = 0; i < data.size(); ++i)
    for (const double c : data.point(i)) CHECK(c == 0.5);
}

TEST_CASE("cantor points avoid the open middle third") {
  const RawDataset data = gen_cantor(5000, 33);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double x = data.point(i)[0];
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    CHECK((x <= 1.0 / 3.0 || x >= 2.0 / 3.0));
  }
}

TEST_CASE("cantor dust fits its known dimension") {
  const NormalizedDataset data = normalize(gen_cantor(100000, 5));
  const D2Estimate est = estimate_d2(data, RadiusSchedule(8, 1));
  CHECK(est.d2 >= 0.5809);  // log(2)/log(3) +- 0.05
  CHECK(est.d2 <= 0.6809);
}

TEST_CASE("generate dispatches and validates the kind/dim combination") {
  CHECK(generate({GeneratorKind::Uniform, 5, 3, 1}).dim == 3);
  CHECK(generate({GeneratorKind::Sierpinski, 5, 2, 1}).dim == 2);
  CHECK_THROWS_AS(generate({GeneratorKind::Sierpinski, 5, 3, 1}), DomainError);
  CHECK_THROWS_AS(generate({GeneratorKind::Cantor, 5, 2, 1}), DomainError);
  CHECK_THROWS_AS(generate({GeneratorKind::Uniform, 0, 2, 1}), DomainError);
}

TEST_CASE("bounded draws are in range and cover all values") {
  Rng rng(77);
  bool seen[3] = {false, false, false};
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = rng.next_below(3);
    REQUIRE(v < 3);
    seen[v] = true;
  }
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
}
