#include "sextic/geometry.hpp"

#include <doctest.h>

#include <cmath>

using namespace sextic;

TEST_CASE("integer roots and rounding") {
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(ceil_rat(Rat(4)) == 4);
  CHECK(iroot_floor(Rat(Int("1000000000000000")), 5) == 1000);
  CHECK(iroot_floor(Rat(Int("999999999999999")), 5) == 999);
  CHECK(iroot_floor(Rat(31, 1), 5) == 1);
  CHECK(iroot_floor(Rat(0), 3) == 0);
}

TEST_CASE("lattice counts agree with brute force") {
  for (long n : {1000L, 50000L, 2000000L}) {
    const RegionM3 r{Rat(n), Rat(1, 2), Rat(3), Rat(1, 4), Rat(5)};
    CHECK(count_lattice_M3(r) == count_lattice_M3_brute(r));
  }
  for (long m : {10L, 777L, 100000L})
    CHECK(count_lattice_M2(Rat(m), Rat(1, 3), Rat(2)) == count_lattice_M2_brute(Rat(m), Rat(1, 3), Rat(2)));
  CHECK(count_lattice_M2(Rat(0), Rat(1), Rat(2)) == 0);
}

TEST_CASE("area and volume") {
  // {x1 x5 <= M, x5/x1 in [a, b]} has area (M/2) log(b/a)
  CHECK(std::fabs(static_cast<double>(area_A(Rat(100), Rat(1, 2), Rat(2))) - 50.0 * std::log(4.0)) < 1e-9);
  const RegionM3 r{Rat(1000000), Rat(1), Rat(2), Rat(1), Rat(2)};
  const long double v = volume_V(r);
  const MonteCarloEstimate mc = monte_carlo_M3(r, 400000, 7);
  CHECK(std::fabs(static_cast<double>(mc.value - v)) < 5.0 * static_cast<double>(mc.std_error) + 1e-9);
  const MonteCarloEstimate again = monte_carlo_M3(r, 400000, 7);
  CHECK(again.value == mc.value);
}

TEST_CASE("error law in two variables") {
  const ErrorLaw e = error_law_M2({Rat(1000000), Rat(100000000), Rat(Int("10000000000")), Rat(Int("1000000000000"))}, Rat(1), Rat(2));
  REQUIRE(e.rows.size() == 4);
  CHECK(e.spread < 2);
  for (const auto& row : e.rows) CHECK(row.scaled_error >= 0);
}

TEST_CASE("empty boxes") {
  Box3 b;
  b.lo = {Rat(2), Rat(1), Rat(1)};
  b.hi = {Rat(1), Rat(2), Rat(2)};
  CHECK(b.empty());
  const RegionM3 r{Rat(1000), Rat(3), Rat(2), Rat(1), Rat(2)};
  CHECK(count_lattice_M3(r) == 0);
  CHECK(volume_V(r) == 0);
}
