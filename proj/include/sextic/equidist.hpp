#pragma once

#include "sextic/classify.hpp"
#include "sextic/densities.hpp"
#include "sextic/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace sextic {

// C: shape coordinates (a4 a5^2/(a1^2 a2), a2 a5/(a1 a3^3 a4), a2 a4).
// T: coordinates (a5/a1, a2 a4, a3).
enum class Family { C, T };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct EnumSpec {
  Family family = Family::C;
  SexticType type{1, 1};
  int sign = 1;
  Box3 box;
  Int n = 0;  // a1^5 a2^4 a3^3 a4^4 a5^5 <= n
  bool carefree = true;      // false: raw integer tuples
  bool collect = true;       // keep the member list
  int workers = 0;           // 0: hardware concurrency
};

using Tuple5 = std::array<long, 5>;

struct EnumResult {
  Int raw_count = 0;       // integer tuples in the region, no arithmetic conditions
  Int carefree_count = 0;  // carefree, irreducible, of the given sign and Type, deduplicated
  std::vector<Tuple5> tuples;  // sorted; raw tuples when !carefree
};

// Region and arithmetic membership of a single tuple (bound, box, carefree, irreducible, Type).
bool in_region(const EnumSpec& spec, const Tuple5& a);
bool is_member(const EnumSpec& spec, const Tuple5& a);
// Dedup rule: t counts when it is a member and either its dual is not, or t is canonical.
bool counts_once(const EnumSpec& spec, const Tuple5& a);

EnumResult enumerate_C(const EnumSpec& spec);
EnumResult enumerate_T(const EnumSpec& spec);
EnumResult enumerate(const EnumSpec& spec);

// Scans every m of the given sign with |m| <= n, decomposes it and applies counts_once.
std::vector<Tuple5> naive_oracle(const EnumSpec& spec);

struct HarnessRow {
  Int n;
  Int raw_count;
  Int carefree_count;
  long double raw_predicted = 0;       // volume or area main term
  long double measure_literal = 0;     // n^{1/5} times the literal measure of the box
  long double measure_normalized = 0;  // n^{1/5} times the density-normalized measure
  long double exact_local = 0;         // finite-n sum of local densities times areas
  long double linear_literal = 0;      // T only: n times the linear-in-n constant with (l-1)/(l+2)
  long double fifth_root = 0;          // T only: n^{1/5} reading with per-key fifth roots
  long double ratio_normalized = 0;    // carefree_count / measure_normalized
  long double ratio_exact_local = 0;   // carefree_count / exact_local
};

struct SlopeFit {
  long double slope = 0;
  long double std_error = 0;
  long double intercept = 0;
  int points = 0;
};

struct HarnessReport {
  EnumSpec spec;
  std::vector<HarnessRow> rows;
  SlopeFit fit;
  std::string supported_exponent;  // "1/5", "1" or "undecided"
};

SlopeFit fit_slope(const std::vector<long double>& x, const std::vector<long double>& y);
HarnessReport compare(const EnumSpec& spec, const std::vector<Int>& ladder, DensityTables& tables,
                      long prime_bound = 10000000);

// Finite-n predictions built from exact local densities.
long double exact_local_prediction(const EnumSpec& spec, DensityTables& tables, long prime_bound = 10000000);
long double raw_prediction(const EnumSpec& spec);

}  // namespace sextic
