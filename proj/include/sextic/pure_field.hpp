#pragma once

#include "sextic/exact.hpp"

#include <array>
#include <map>
#include <vector>

namespace sextic {

// Prime factorization of |x| as (prime, exponent) pairs in increasing order.
std::vector<std::pair<Int, unsigned>> factorize(const Int& x);
bool is_probable_prime(const Int& x);

struct CarefreeTuple {
  int sign = 1;
  std::array<Int, 5> a{Int(1), Int(1), Int(1), Int(1), Int(1)};

  Int m() const;
  friend bool operator==(const CarefreeTuple& x, const CarefreeTuple& y) { return x.sign == y.sign && x.a == y.a; }
};

// Exponent-class decomposition; throws NotSixthPowerFree.
CarefreeTuple decompose(const Int& m);
Int reconstruct(const CarefreeTuple& t);
bool is_valid_tuple(const CarefreeTuple& t);
bool is_irreducible_sextic(const Int& m);
CarefreeTuple dual(const CarefreeTuple& t);
// C_0..C_5 with C_i = prod a_j^{floor(ij/6)}.
std::array<Int, 6> big_c(const CarefreeTuple& t);
// a4*a5^2 >= a1^2*a2, ties broken towards the lexicographically smaller tuple.
bool is_canonical(const CarefreeTuple& t);
CarefreeTuple canonical(const CarefreeTuple& t);

struct SexticField {
  Int m;
  CarefreeTuple tuple;
  std::array<Int, 6> c;  // c[0] = 1
  bool canonical = false;

  // Validates sixth-power-freeness and irreducibility.
  static SexticField make(const Int& m);
};

// m = sign * prod a_e^e, e = 1..n-1, for an n-th-power-free m.
struct PureTuple {
  int n = 0;
  int sign = 1;
  std::vector<Int> a;  // a[e] for e = 1..n-1; a[0] unused
};

PureTuple decompose_general(int n, const Int& m);
// C_0..C_{n-1}.
std::vector<Int> big_c_general(const PureTuple& t);

// Either v_p(m) = 0 or gcd(v_p(m), p) = 1 for every prime p | n.
bool assumption_holds(int n, const Int& m);

struct DiscValuations {
  int n = 0;
  std::map<Int, unsigned> wild;     // v_i at primes p_i | n
  std::map<Int, unsigned> radical;  // n - gcd(n, v_q(m)) at primes q | m
  unsigned total(const Int& p) const;
  Int abs_value() const;
};

// Throws AssumptionViolated.
DiscValuations disc_valuations(int n, const Int& m);

// coeff * prod a_j^{exps[j-1]} with rational exponents.
struct RadicalMonomial {
  Rat coeff = 1;
  std::vector<Rat> exps;

  friend bool operator==(const RadicalMonomial& x, const RadicalMonomial& y) { return x.coeff == y.coeff && x.exps == y.exps; }
  RadicalMonomial inverse() const;
  std::string str() const;
  // Decimal value for the given a_1..a_k.
  std::string decimal(const std::vector<Int>& a, int digits) const;
  double to_double(const std::vector<Int>& a) const;
};

// p-adic valuation of a nonzero integer.
unsigned valuation(const Int& x, const Int& p);
std::vector<Int> prime_divisors(const Int& x);

}  // namespace sextic
