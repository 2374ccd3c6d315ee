#include "sextic/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace sextic {

namespace {

long mod(const Int& m, long q) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(q));
  return r.get_si();
}

bool in(long x, std::initializer_list<long> xs) {
  for (long v : xs)
    if (x == v) return true;
  return false;
}

const std::vector<SexticType>& table46656() {
  static const std::vector<SexticType> t = [] {
    std::vector<SexticType> out(46656);
    for (long r = 0; r < 46656; ++r) {
      SexticType ty;
      for (int i = 1; i <= 5; ++i)
        if (a_row(i, Int(r))) ty.i = i;
      for (int j = 1; j <= 4; ++j)
        if (b_row(j, Int(r))) ty.j = j;
      if (ty.i == 0 || ty.j == 0) ty = SexticType{};
      out[static_cast<std::size_t>(r)] = ty;
    }
    return out;
  }();
  return t;
}

}  // namespace

std::string SexticType::name() const { return "A" + std::to_string(i) + ",B" + std::to_string(j); }

SexticType type_from_index(int index) {
  if (index < 0 || index >= 20) throw Error(ErrorCode::InvalidArgument, "type index out of range");
  return {index / 4 + 1, index % 4 + 1};
}

SexticType parse_type(const std::string& s) {
  std::string digits;
  for (char c : s)
    if (c >= '0' && c <= '9') digits += c;
  if (digits.size() != 2) throw Error(ErrorCode::InvalidArgument, "bad type '" + s + "'");
  SexticType t{digits[0] - '0', digits[1] - '0'};
  if (t.i < 1 || t.i > 5 || t.j < 1 || t.j > 4) throw Error(ErrorCode::InvalidArgument, "bad type '" + s + "'");
  return t;
}

bool a_row(int i, const Int& m) {
  switch (i) {
    case 1: return in(mod(m, 4), {2, 3}) || mod(m, 16) == 8 || mod(m, 64) == 32;
    case 2: return mod(m, 4) == 1 || mod(m, 16) == 4;
    case 3: return mod(m, 16) == 12;
    case 4: return mod(m, 64) == 16;
    case 5: return mod(m, 64) == 48;
  }
  throw Error(ErrorCode::InvalidArgument, "A-case out of range");
}

bool b_row(int j, const Int& m) {
  switch (j) {
    case 1:
      return in(mod(m, 9), {2, 3, 4, 5, 6, 7}) || in(mod(m, 27), {9, 18}) || in(mod(m, 243), {81, 162}) ||
             in(mod(m, 729), {243, 486});
    case 2: return in(mod(m, 9), {1, 8});
    case 3: return in(mod(m, 243), {27, 216});
    case 4: return in(mod(m, 243), {54, 108, 135, 189});
  }
  throw Error(ErrorCode::InvalidArgument, "B-case out of range");
}

SexticType classify_residue(long r) {
  r %= 46656;
  if (r < 0) r += 46656;
  return table46656()[static_cast<std::size_t>(r)];
}

SexticType classify(const Int& m) {
  SexticType t = classify_residue(mod(m, 46656));
  if (t.i == 0) throw Error(ErrorCode::Unclassifiable, "m = " + m.get_str() + " matches no case (64 | m or 729 | m)");
  return t;
}

SexticType classify_residue15552(long r) {
  r %= 15552;
  if (r < 0) r += 15552;
  const Int x(r);
  SexticType t;
  for (int i = 1; i <= 5; ++i)
    if (a_row(i, x)) t.i = i;
  if (r % 243 == 0) t.j = 1;
  else
    for (int j = 1; j <= 4; ++j)
      if (b_row(j, x)) t.j = j;
  if (t.i == 0 || t.j == 0) return SexticType{};
  return t;
}

long residue_constancy_violations() {
  long bad = 0;
  for (long r = 0; r < 15552; ++r) {
    const SexticType base = classify_residue15552(r);
    for (long lift = r; lift < 46656; lift += 15552) {
      const SexticType t = classify_residue(lift);
      if (t.i == 0) continue;  // lifts with 729 | m are not sixth-power free
      if (!(t == base)) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

bool is_sixth_power_free(long m) {
  if (m == 0) return false;
  unsigned long a = static_cast<unsigned long>(std::labs(m));
  for (unsigned long p = 2; p * p * p * p * p * p <= a; ++p) {
    unsigned long p6 = p * p * p * p * p * p;
    if (a % p6 == 0) return false;
  }
  return true;
}

bool is_square_or_cube(long m) {
  const Int x(m);
  if (mpz_perfect_square_p(x.get_mpz_t())) return true;
  Int r;
  return mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3) != 0;
}

PartitionReport type_partition_check(long lo, long hi) {
  PartitionReport rep;
  rep.lo = lo;
  rep.hi = hi;
  for (long m = lo; m <= hi; ++m) {
    if (!is_sixth_power_free(m) || is_square_or_cube(m)) continue;
    ++rep.checked;
    const Int x(m);
    int na = 0, nb = 0, ia = 0, jb = 0;
    for (int i = 1; i <= 5; ++i)
      if (a_row(i, x)) ++na, ia = i;
    for (int j = 1; j <= 4; ++j)
      if (b_row(j, x)) ++nb, jb = j;
    if (na != 1 || nb != 1) {
      ++rep.violations;
      if (rep.violating.size() < 16) rep.violating.push_back(m);
      continue;
    }
    ++rep.per_type[static_cast<std::size_t>(SexticType{ia, jb}.index())];
  }
  return rep;
}

}  // namespace sextic
