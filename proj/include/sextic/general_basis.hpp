#pragma once

#include "sextic/pure_field.hpp"

#include <vector>

namespace sextic {

struct WildPrime {
  Int p;
  unsigned s = 0;  // v_p(n)
  long r = 0;      // v_p(m^{p-1} - 1) - 1
  unsigned d = 0;  // min(r, s)
};

struct WildEntry {
  unsigned k = 0;  // k_{i,t}
  long j = 0;      // j_{i,t}
  long n_it = 0;   // n / p^k
  Int b_prime, a_prime, w, z, u;
  PureNum delta;   // zero when k = 0
};

struct WildData {
  int n = 0;
  Int m;
  std::vector<WildPrime> primes;                 // the set S, in increasing order
  std::vector<std::vector<WildEntry>> entries;   // entries[i][t] for i in S, t in [0, n-1]
  std::vector<PureNum> beta;                     // beta_t
  std::vector<Int> c;                            // C_t
};

// Throws AssumptionViolated.
WildData wild_data(int n, const Int& m);
std::vector<PureNum> general_integral_basis(int n, const Int& m);
std::vector<PureNum> general_integral_basis(const WildData& w);

// Connecting matrix from the span of `a` to the span of `b` is integral with determinant +-1.
bool same_lattice(const std::vector<PureNum>& a, const std::vector<PureNum>& b);

// lambda_1 .. lambda_{floor(n/2)} as exponent vectors over a_1 .. a_{n-1}.
std::vector<RadicalMonomial> general_shape_params(const PureTuple& t);

}  // namespace sextic
