#pragma once

#include "sextic/classify.hpp"
#include "sextic/geometry.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace sextic {

// Omega_l for l >= 5 on (Z/l^2)^5: at most one coordinate divisible by l.
bool omega_member(long l, const std::array<long, 5>& a);
// The pairwise reading: l^2 does not divide a_i a_j for any i < j.
bool omega_member_pairwise(long l, const std::array<long, 5>& a);
Int omega_count_closed(long l);            // (l^2 - l)^5 + 5 l (l^2 - l)^4
Int omega_count_product_form(long l);      // l^10 (1 - 1/l)^4 (1 + 4/l), evaluated exactly
Int omega_count_exhaustive(long l);
Int omega_count_pairwise_exhaustive(long l);

// A-case of a residue mod 64 and B-case of a residue mod 243 (0 when none applies).
int a_case_mod64(long r);
int b_case_mod243(long r);

// Tuples of residues mod 64 (resp. 243): pairwise 4 (resp. 9) does not divide a_i a_j, and the
// signed m lands in the A-case i (resp. B-case j).
bool omega2_member(int i, int sign, const std::array<long, 5>& a);
bool omega3_member(int j, int sign, const std::array<long, 5>& a);

class DensityTables {
 public:
  // Empty dir: SEXTIC_CACHE_DIR if set, else in-memory only.
  explicit DensityTables(std::string dir = "");
  ~DensityTables();

  const std::string& dir() const { return dir_; }

  // Counts of (a1, a3, a5) over (Z/64)^3 per A-case, and over (Z/243)^3 per B-case.
  std::array<Int, 5> n2(int sign, long a2, long a4);
  std::array<Int, 4> n3(int sign, long a2, long a4);
  // Counts of (a1, a5) over (Z/64)^2 and (Z/243)^2.
  std::array<Int, 5> m2(int sign, long a2, long a3, long a4);
  std::array<Int, 4> m3(int sign, long a2, long a3, long a4);

  // Throws InvalidPair unless a2 a4 is squarefree.
  Int n_table(const SexticType& t, int sign, long a2, long a4);
  Int m_table(const SexticType& t, int sign, long a2, long a3, long a4);

  // Writes pending entries to disk (temp file then rename).
  void flush();

 private:
  using Key = std::string;
  template <std::size_t K>
  using Store = std::map<Key, std::array<Int, K>>;

  void load();
  template <std::size_t K>
  void load_file(const std::string& name, Store<K>& store);
  template <std::size_t K>
  void save_file(const std::string& name, const Store<K>& store, long modulus) const;

  std::string dir_;
  std::mutex mu_;
  bool dirty_ = false;
  Store<5> n2_, m2_;
  Store<4> n3_, m3_;
};

// Slices with a5 fixed, used to validate the CRT factorization against a direct count mod 15552.
std::array<Int, 5> n2_slice(int sign, long a2, long a4, long a5);
std::array<Int, 4> n3_slice(int sign, long a2, long a4, long a5);
Int n_slice_direct15552(const SexticType& t, int sign, long a2, long a4, long a5);
Int m_table_direct15552(const SexticType& t, int sign, long a2, long a3, long a4);

struct LocalRatio {
  long l = 0;
  int free_coords = 0;
  Int coprime_count;   // fixed coordinates prime to l
  Int divisible_count; // exactly one fixed coordinate divisible by l (exactly once)
  Rat ratio;
  Rat predicted_plus2;  // (l-1)/(l+2)
  Rat predicted_plus1;  // (l-1)/(l+1)
  bool carefree_model = false;  // true: a_i squarefree and pairwise coprime; false: at most one coordinate divisible by l
};

// free_coords = 3 fixes (a2, a4); free_coords = 2 fixes (a2, a3, a4).
LocalRatio local_ratio(long l, int free_coords, bool carefree_model);

enum class EulerKind { Carefree, Basic };

struct EulerProduct {
  long double value = 0;
  long double tail_bound = 0;
  long prime_bound = 0;
};

// Product over primes l <= bound not in `exclude` of (1 - 3/l^2 + 2/l^3) or (1 - 1/l^2).
EulerProduct euler_product(EulerKind kind, const std::vector<long>& exclude, long prime_bound);
std::vector<long> primes_up_to(long bound);

// Term coeff * base^exponent.
struct PowerTerm {
  Rat coeff;
  Int base;
  Rat exponent;
  long double value() const;
};

struct AlphaValue {
  std::vector<PowerTerm> terms;
  long double value() const;
};

// sum over n1 n2 = n of n_{i,j}(n1, n2) / (n1^{3/5} n2), times prod_{l | n, l != 2,3} (l-1)/(l+2); 0 unless n squarefree.
AlphaValue alpha(DensityTables& tables, const SexticType& t, int sign, long n);
// prod_{l | mn, l != 2,3} ratio(l) * sum over n1 n2 = n of m_{i,j}(n1, m, n2) / (n^4 m^3); ratio (l-1)/(l+1), or (l-1)/(l+2) when plus2.
Rat beta(DensityTables& tables, const SexticType& t, int sign, long m, long n, bool plus2 = false);

enum class MeasureKind { Mu, Nu };
// Literal: raw local counts with the constants 1/559872 (mu) and 1/2592 (nu). DensityNormalized: local counts divided by the number of residue tuples.
enum class MeasureMode { Literal, DensityNormalized };

struct MeasureSpec {
  MeasureKind kind = MeasureKind::Mu;
  SexticType type{1, 1};
  int sign = 1;
  MeasureMode mode = MeasureMode::Literal;
  long prime_bound = 10000000;
};

struct MeasureValue {
  long double value = 0;
  long double error_bound = 0;
};

// Mu: box in (x1, x2, x3) with x3 integral. Nu: box in (x1, x2 = a3, x3 = a2 a4).
MeasureValue integrate_measure(DensityTables& tables, const MeasureSpec& spec, const Box3& box);

bool is_squarefree(long n);
std::vector<long> prime_factors(long n);

}  // namespace sextic
