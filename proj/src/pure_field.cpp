#include "sextic/pure_field.hpp"

#include <algorithm>
#include <numeric>

namespace sextic {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kTrialBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= kTrialBound; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int rho_factor(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long batch = 128;
    auto f = [&](const Int& v) {
      Int out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          Int d = abs(Int(x - y));
          q = (q * d) % n;
        }
        g = gcd_int(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_int(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = rho_factor(n);
  factor_rec(d, out);
  factor_rec(Int(n / d), out);
}

Int ipow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

bool is_probable_prime(const Int& x) {
  if (x < 2) return false;
  return mpz_probab_prime_p(x.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  Int n = abs(x);
  std::map<Int, unsigned> out;
  for (unsigned long p : small_primes()) {
    if (Int(p) * p > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) out[Int(p)] = e;
  }
  factor_rec(n, out);
  return {out.begin(), out.end()};
}

unsigned valuation(const Int& x, const Int& p) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Int y = x;
  unsigned e = 0;
  while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

std::vector<Int> prime_divisors(const Int& x) {
  std::vector<Int> out;
  for (auto& [p, e] : factorize(x)) out.push_back(p);
  return out;
}

Int CarefreeTuple::m() const { return reconstruct(*this); }

Int reconstruct(const CarefreeTuple& t) {
  Int m = t.sign;
  for (unsigned e = 1; e <= 5; ++e) m *= ipow(t.a[e - 1], e);
  return m;
}

bool is_valid_tuple(const CarefreeTuple& t) {
  if (t.sign != 1 && t.sign != -1) return false;
  for (const Int& x : t.a) {
    if (x < 1) return false;
    for (auto& [p, e] : factorize(x))
      if (e > 1) return false;
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (gcd_int(t.a[i], t.a[j]) != 1) return false;
  return true;
}

CarefreeTuple decompose(const Int& m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be nonzero");
  CarefreeTuple t;
  t.sign = m < 0 ? -1 : 1;
  for (auto& [p, e] : factorize(m)) {
    if (e >= 6) throw Error(ErrorCode::NotSixthPowerFree, "m = " + m.get_str() + " is divisible by " + p.get_str() + "^6");
    t.a[e - 1] *= p;
  }
  return t;
}

bool is_irreducible_sextic(const Int& m) {
  if (m == 0) return false;
  if (mpz_perfect_square_p(m.get_mpz_t())) return false;
  Int r;
  if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3) != 0) return false;
  return true;
}

CarefreeTuple dual(const CarefreeTuple& t) {
  CarefreeTuple out = t;
  std::reverse(out.a.begin(), out.a.end());
  return out;
}

std::array<Int, 6> big_c(const CarefreeTuple& t) {
  std::array<Int, 6> c;
  for (int i = 0; i < 6; ++i) {
    c[i] = 1;
    for (int j = 1; j <= 5; ++j) c[i] *= ipow(t.a[j - 1], static_cast<unsigned long>(i * j / 6));
  }
  return c;
}

bool is_canonical(const CarefreeTuple& t) {
  const Int lhs = t.a[3] * t.a[4] * t.a[4];
  const Int rhs = t.a[0] * t.a[0] * t.a[1];
  if (lhs != rhs) return lhs > rhs;
  const CarefreeTuple d = dual(t);
  return !std::lexicographical_compare(d.a.begin(), d.a.end(), t.a.begin(), t.a.end());
}

CarefreeTuple canonical(const CarefreeTuple& t) { return is_canonical(t) ? t : dual(t); }

SexticField SexticField::make(const Int& m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be nonzero");
  SexticField f;
  f.m = m;
  f.tuple = decompose(m);
  if (!is_irreducible_sextic(m)) throw Error(ErrorCode::Reducible, "x^6 - (" + m.get_str() + ") is reducible");
  f.c = big_c(f.tuple);
  f.canonical = is_canonical(f.tuple);
  return f;
}

PureTuple decompose_general(int n, const Int& m) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be nonzero");
  PureTuple t;
  t.n = n;
  t.sign = m < 0 ? -1 : 1;
  t.a.assign(static_cast<std::size_t>(n), Int(1));
  for (auto& [p, e] : factorize(m)) {
    if (e >= static_cast<unsigned>(n))
      throw Error(ErrorCode::NotSixthPowerFree, "m = " + m.get_str() + " is not " + std::to_string(n) + "-th power free");
    t.a[e] *= p;
  }
  return t;
}

std::vector<Int> big_c_general(const PureTuple& t) {
  std::vector<Int> c(static_cast<std::size_t>(t.n), Int(1));
  for (int i = 0; i < t.n; ++i)
    for (int j = 1; j < t.n; ++j) c[i] *= ipow(t.a[j], static_cast<unsigned long>(i * j / t.n));
  return c;
}

bool assumption_holds(int n, const Int& m) {
  for (auto& [p, e] : factorize(Int(n))) {
    (void)e;
    unsigned v = valuation(m, p);
    if (v != 0 && std::gcd(static_cast<unsigned long>(v), p.get_ui()) != 1) return false;
  }
  return true;
}

unsigned DiscValuations::total(const Int& p) const {
  unsigned out = 0;
  if (auto it = wild.find(p); it != wild.end()) out += it->second;
  if (auto it = radical.find(p); it != radical.end()) out += it->second;
  return out;
}

Int DiscValuations::abs_value() const {
  Int out = 1;
  for (auto& [p, e] : wild) out *= ipow(p, e);
  for (auto& [q, e] : radical) out *= ipow(q, e);
  return out;
}

DiscValuations disc_valuations(int n, const Int& m) {
  decompose_general(n, m);
  if (!assumption_holds(n, m)) throw Error(ErrorCode::AssumptionViolated, "m = " + m.get_str() + " violates the valuation assumption at a prime dividing n");
  DiscValuations d;
  d.n = n;
  for (auto& [p, s] : factorize(Int(n))) {
    const long n_i = n / static_cast<long>(ipow(p, s).get_si());
    Int x = ipow(m, p.get_ui() - 1) - 1;
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "m^(p-1) = 1");
    const long r = static_cast<long>(valuation(x, p)) - 1;
    long v = static_cast<long>(n) * s;
    if (r > 0) {
      long sum = 0;
      for (long j = 1; j <= std::min<long>(r, s); ++j) sum += ipow(p, static_cast<unsigned long>(s - j)).get_si();
      v -= 2 * n_i * sum;
    }
    d.wild[p] = static_cast<unsigned>(v);
  }
  for (auto& [q, t] : factorize(m))
    d.radical[q] = static_cast<unsigned>(n - static_cast<int>(std::gcd(static_cast<unsigned>(n), t)));
  return d;
}

}  // namespace sextic

#include <mpfr.h>

#include <sstream>

namespace sextic {

RadicalMonomial RadicalMonomial::inverse() const {
  RadicalMonomial out;
  out.coeff = 1 / coeff;
  for (const Rat& e : exps) out.exps.push_back(-e);
  return out;
}

std::string RadicalMonomial::str() const {
  std::ostringstream os;
  os << coeff.get_str();
  for (std::size_t j = 0; j < exps.size(); ++j)
    if (exps[j] != 0) os << "*a" << j + 1 << "^(" << exps[j].get_str() << ")";
  return os.str();
}

std::string RadicalMonomial::decimal(const std::vector<Int>& a, int digits) const {
  if (a.size() < exps.size()) throw Error(ErrorCode::InvalidArgument, "monomial needs more a_j");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t acc, t, e;
  mpfr_inits2(prec, acc, t, e, (mpfr_ptr)0);
  mpfr_set_q(acc, coeff.get_mpq_t(), MPFR_RNDN);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    mpfr_set_z(t, a[j].get_mpz_t(), MPFR_RNDN);
    mpfr_set_q(e, exps[j].get_mpq_t(), MPFR_RNDN);
    mpfr_pow(t, t, e, MPFR_RNDN);
    mpfr_mul(acc, acc, t, MPFR_RNDN);
  }
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), acc);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clears(acc, t, e, (mpfr_ptr)0);
  return out;
}

double RadicalMonomial::to_double(const std::vector<Int>& a) const { return std::stod(decimal(a, 20)); }

}  // namespace sextic
