#pragma once

#include "sextic/exact.hpp"

#include <cstdint>
#include <vector>

namespace sextic {

struct Box3 {
  std::array<Rat, 3> lo{Rat(0), Rat(0), Rat(0)};
  std::array<Rat, 3> hi{Rat(0), Rat(0), Rat(0)};
  bool empty() const;
  bool contains(int axis, const Rat& x) const { return lo[axis] <= x && x <= hi[axis]; }
};

// {x1, x3, x5 > 0 : x1^5 x3^3 x5^5 <= N, x5/x1 in [L1p, L1], x5/(x3^3 x1) in [L2p, L2]}
struct RegionM3 {
  Rat n, l1p, l1, l2p, l2;
};

long double volume_V(const RegionM3& r);
Int count_lattice_M3(const RegionM3& r);
Int count_lattice_M3_brute(const RegionM3& r);

// {x1, x5 > 0 : x1 x5 <= M, x5/x1 in [L1p, L1]}
long double area_A(const Rat& m, const Rat& l1p, const Rat& l1);
Int count_lattice_M2(const Rat& m, const Rat& l1p, const Rat& l1);
Int count_lattice_M2_brute(const Rat& m, const Rat& l1p, const Rat& l1);

struct MonteCarloEstimate {
  long double value = 0;
  long double std_error = 0;
  std::uint64_t samples = 0;
};

// Needs l1p > 0 and l2p > 0 for a bounded sampling box.
MonteCarloEstimate monte_carlo_M3(const RegionM3& r, std::uint64_t samples, std::uint64_t seed);

struct ErrorLawRow {
  Rat n;
  Int count;
  long double main_term = 0;
  long double scaled_error = 0;  // |count - main| / n^exponent
};

struct ErrorLaw {
  std::vector<ErrorLawRow> rows;
  long double spread = 0;  // max / min of scaled_error
};

ErrorLaw error_law_M3(const std::vector<Rat>& ns, const Rat& l1p, const Rat& l1, const Rat& l2p, const Rat& l2);
ErrorLaw error_law_M2(const std::vector<Rat>& ms, const Rat& l1p, const Rat& l1);

// floor and ceiling of a rational
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
// largest y >= 0 with y^k <= x (x >= 0)
Int iroot_floor(const Rat& x, unsigned k);
long double to_ld(const Rat& x);

}  // namespace sextic
