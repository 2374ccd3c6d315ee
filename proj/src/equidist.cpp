#include "sextic/equidist.hpp"

#include "sextic/pure_field.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace sextic {

namespace {

using i128 = __int128;

bool squarefree(long x) { return is_squarefree(x); }

bool carefree(const Tuple5& a) {
  for (int i = 0; i < 5; ++i) {
    if (a[i] < 1 || !squarefree(a[i])) return false;
    for (int j = i + 1; j < 5; ++j)
      if (std::gcd(a[i], a[j]) != 1) return false;
  }
  return true;
}

long m_mod(int sign, const Tuple5& a, long q) {
  long r = sign > 0 ? 1 : q - 1;
  for (int i = 0; i < 5; ++i) {
    const long x = a[i] % q;
    for (int k = 0; k <= i; ++k) r = r * x % q;
  }
  return r;
}

// Carefree, irreducible, and of the requested Type.
bool arithmetic_ok(const EnumSpec& spec, const Tuple5& a) {
  if (!carefree(a)) return false;
  if (spec.sign > 0 && a[0] == 1 && a[2] == 1 && a[4] == 1) return false;  // square
  if (a[0] == 1 && a[1] == 1 && a[3] == 1 && a[4] == 1) return false;      // cube
  return classify_residue(m_mod(spec.sign, a, 46656)) == spec.type;
}

Tuple5 dual5(const Tuple5& a) { return {a[4], a[3], a[2], a[1], a[0]}; }

bool canonical5(const Tuple5& a) {
  const i128 lhs = static_cast<i128>(a[3]) * a[4] * a[4];
  const i128 rhs = static_cast<i128>(a[0]) * a[0] * a[1];
  if (lhs != rhs) return lhs > rhs;
  const Tuple5 d = dual5(a);
  return !std::lexicographical_compare(d.begin(), d.end(), a.begin(), a.end());
}

Int big(long x) { return Int(x); }

Int isqrt_ceil(const Int& x) {
  if (x <= 0) return 0;
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

Int icbrt_ceil(const Int& x) {
  if (x <= 0) return 0;
  Int r = iroot_floor(Rat(x), 3);
  if (r * r * r < x) ++r;
  return r;
}

Int pow_int(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

struct Shard {
  Int raw = 0;
  Int cf = 0;
  std::vector<Tuple5> tuples;
};

void visit(const EnumSpec& spec, const Tuple5& a, Shard& s) {
  if (!spec.carefree) {
    if (spec.collect) s.tuples.push_back(a);
    return;
  }
  if (!arithmetic_ok(spec, a)) return;
  if (is_member(spec, dual5(a)) && !canonical5(a)) return;
  ++s.cf;
  if (spec.collect) s.tuples.push_back(a);
}

void scan_C(const EnumSpec& spec, long a2, long a4, Shard& s) {
  const Int P = pow_int(big(a2), 4) * pow_int(big(a4), 4);
  if (P > spec.n) return;
  const Rat &r1p = spec.box.lo[0], &r1 = spec.box.hi[0], &r2p = spec.box.lo[1], &r2 = spec.box.hi[1];
  if (r2 <= 0) return;
  for (long a1 = 1;; ++a1) {
    const Int A1 = big(a1);
    const Int a5min = std::max(Int(1), isqrt_ceil(ceil_rat(r1p * Rat(A1 * A1 * a2, big(a4)))));
    const Int P1 = P * pow_int(A1, 5);
    const Int a5bound = P1 > spec.n ? Int(0) : iroot_floor(Rat(spec.n / P1), 5);
    if (a5min > a5bound) break;
    Int a5max = iroot_floor(Rat(floor_rat(r1 * Rat(A1 * A1 * a2, big(a4)))), 2);
    a5max = std::min(a5max, a5bound);
    for (Int A5 = a5min; A5 <= a5max; ++A5) {
      const long a5 = A5.get_si();
      const Int Q = spec.n / (P1 * pow_int(A5, 5));
      Int hi = iroot_floor(Rat(Q), 3);
      const Rat base(big(a2) * A5, A1 * a4);  // a2 a5 / (a1 a4) = x2 a3^3
      if (r2p > 0) hi = std::min(hi, iroot_floor(base / r2p, 3));
      const Int lo = std::max(Int(1), icbrt_ceil(ceil_rat(base / r2)));
      if (hi < lo) continue;
      s.raw += hi - lo + 1;
      for (Int A3 = lo; A3 <= hi; ++A3) visit(spec, {a1, a2, A3.get_si(), a4, a5}, s);
    }
  }
}

void scan_T(const EnumSpec& spec, long a2, long a4, long a3, Shard& s) {
  const Int P = pow_int(big(a2), 4) * pow_int(big(a3), 3) * pow_int(big(a4), 4);
  if (P > spec.n) return;
  const Rat &r1p = spec.box.lo[0], &r1 = spec.box.hi[0];
  const Int M = iroot_floor(Rat(spec.n / P), 5);  // a1 a5 <= M
  for (long a1 = 1;; ++a1) {
    const Int A1 = big(a1);
    const Int a5min = std::max(Int(1), ceil_rat(r1p * Rat(A1)));
    if (A1 * a5min > M) break;
    const Int a5max = std::min(floor_rat(r1 * Rat(A1)), Int(M / A1));
    if (a5max < a5min) continue;
    s.raw += a5max - a5min + 1;
    for (Int A5 = a5min; A5 <= a5max; ++A5) visit(spec, {a1, a2, a3, a4, A5.get_si()}, s);
  }
}

template <class Key, class F>
EnumResult run_shards(const EnumSpec& spec, const std::vector<Key>& keys, F&& scan) {
  std::vector<Shard> shards(keys.size());
  unsigned workers = spec.workers > 0 ? static_cast<unsigned>(spec.workers) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, keys.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < keys.size();) scan(keys[k], shards[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  EnumResult out;
  for (auto& s : shards) {
    out.raw_count += s.raw;
    out.carefree_count += s.cf;
    out.tuples.insert(out.tuples.end(), s.tuples.begin(), s.tuples.end());
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  return out;
}

// Divisor pairs (a2, a4) with a2 a4 = n for n in [lo, hi].
std::vector<std::array<long, 2>> product_pairs(const Rat& lo, const Rat& hi) {
  std::vector<std::array<long, 2>> out;
  const Int l = std::max(Int(1), ceil_rat(lo)), h = floor_rat(hi);
  for (Int n = l; n <= h; ++n) {
    const long v = n.get_si();
    for (long d = 1; d <= v; ++d)
      if (v % d == 0) out.push_back({d, v / d});
  }
  return out;
}

long double ld(const Int& x) { return to_ld(Rat(x)); }

long double fifth_root(const Int& x) { return std::pow(ld(x), 0.2L); }

Rat approx(long double x) { return Rat(static_cast<double>(x)); }

// prod over l | x, l >= 5, of f(l)
template <class F>
long double local_product(long x, F&& f) {
  long double v = 1;
  for (long l : prime_factors(x))
    if (l >= 5) v *= f(static_cast<long double>(l));
  return v;
}

constexpr long double kResidues2 = 15552.0L * 15552.0L;

}  // namespace

std::string family_name(Family f) { return f == Family::C ? "C" : "T"; }

Family parse_family(const std::string& s) {
  if (s == "C" || s == "c") return Family::C;
  if (s == "T" || s == "t") return Family::T;
  throw Error(ErrorCode::InvalidArgument, "family must be C or T");
}

bool in_region(const EnumSpec& spec, const Tuple5& a) {
  for (long x : a)
    if (x < 1) return false;
  const Int a1 = big(a[0]), a2 = big(a[1]), a3 = big(a[2]), a4 = big(a[3]), a5 = big(a[4]);
  if (pow_int(a1, 5) * pow_int(a2, 4) * pow_int(a3, 3) * pow_int(a4, 4) * pow_int(a5, 5) > spec.n) return false;
  std::array<Rat, 3> x;
  if (spec.family == Family::C) {
    x = {Rat(a4 * a5 * a5, a1 * a1 * a2), Rat(a2 * a5, a1 * a3 * a3 * a3 * a4), Rat(a2 * a4)};
  } else {
    x = {Rat(a5, a1), Rat(a2 * a4), Rat(a3)};
  }
  for (auto& v : x) v.canonicalize();
  for (int k = 0; k < 3; ++k)
    if (!spec.box.contains(k, x[k])) return false;
  return true;
}

bool is_member(const EnumSpec& spec, const Tuple5& a) {
  if (!in_region(spec, a)) return false;
  return !spec.carefree || arithmetic_ok(spec, a);
}

bool counts_once(const EnumSpec& spec, const Tuple5& a) {
  if (!is_member(spec, a)) return false;
  return !spec.carefree || !is_member(spec, dual5(a)) || canonical5(a);
}

EnumResult enumerate_C(const EnumSpec& spec) {
  if (spec.box.empty()) return {};
  if (spec.box.lo[0] < 1) throw Error(ErrorCode::InvalidArgument, "C family needs R1' >= 1");
  const auto keys = product_pairs(spec.box.lo[2], spec.box.hi[2]);
  return run_shards(spec, keys, [&](const std::array<long, 2>& k, Shard& s) { scan_C(spec, k[0], k[1], s); });
}

EnumResult enumerate_T(const EnumSpec& spec) {
  if (spec.box.empty()) return {};
  std::vector<std::array<long, 3>> keys;
  const Int l3 = std::max(Int(1), ceil_rat(spec.box.lo[2])), h3 = floor_rat(spec.box.hi[2]);
  for (const auto& p : product_pairs(spec.box.lo[1], spec.box.hi[1]))
    for (Int a3 = l3; a3 <= h3; ++a3) {
      if (pow_int(big(p[0]), 4) * pow_int(a3, 3) * pow_int(big(p[1]), 4) > spec.n) break;
      keys.push_back({p[0], p[1], a3.get_si()});
    }
  return run_shards(spec, keys, [&](const std::array<long, 3>& k, Shard& s) { scan_T(spec, k[0], k[1], k[2], s); });
}

EnumResult enumerate(const EnumSpec& spec) { return spec.family == Family::C ? enumerate_C(spec) : enumerate_T(spec); }

std::vector<Tuple5> naive_oracle(const EnumSpec& spec) {
  if (spec.n > 100000000) throw Error(ErrorCode::InvalidArgument, "naive oracle is limited to n <= 10^8");
  const long n = spec.n.get_si();
  std::vector<int> spf(static_cast<std::size_t>(n + 1), 0);
  for (long p = 2; p <= n; ++p) {
    if (spf[static_cast<std::size_t>(p)]) continue;
    for (long k = p; k <= n; k += p)
      if (!spf[static_cast<std::size_t>(k)]) spf[static_cast<std::size_t>(k)] = static_cast<int>(p);
  }
  std::vector<Tuple5> out;
  for (long k = 1; k <= n; ++k) {
    Tuple5 a{1, 1, 1, 1, 1};
    long x = k;
    bool ok = true;
    while (x > 1) {
      const long p = spf[static_cast<std::size_t>(x)];
      int e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (e >= 6) {
        ok = false;
        break;
      }
      a[static_cast<std::size_t>(e - 1)] *= p;
    }
    if (ok && counts_once(spec, a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long double raw_prediction(const EnumSpec& spec) {
  if (spec.box.empty()) return 0;
  long double total = 0;
  const Box3& b = spec.box;
  if (spec.family == Family::C) {
    for (const auto& [a2, a4] : product_pairs(b.lo[2], b.hi[2])) {
      const Rat q(big(a2), big(a4));
      RegionM3 r;
      r.n = Rat(spec.n) / Rat(pow_int(big(a2), 4) * pow_int(big(a4), 4));
      r.l1p = approx(std::sqrt(to_ld(b.lo[0] * q)));
      r.l1 = approx(std::sqrt(to_ld(b.hi[0] * q)));
      r.l2p = b.lo[1] / q;
      r.l2 = b.hi[1] / q;
      total += volume_V(r);
    }
    return total;
  }
  const Int l3 = std::max(Int(1), ceil_rat(b.lo[2])), h3 = floor_rat(b.hi[2]);
  for (const auto& [a2, a4] : product_pairs(b.lo[1], b.hi[1]))
    for (Int a3 = l3; a3 <= h3; ++a3) {
      const Int P = pow_int(big(a2), 4) * pow_int(a3, 3) * pow_int(big(a4), 4);
      total += area_A(approx(std::pow(to_ld(Rat(spec.n) / Rat(P)), 0.2L)), b.lo[0], b.hi[0]);
    }
  return total;
}

long double exact_local_prediction(const EnumSpec& spec, DensityTables& tables, long prime_bound) {
  if (spec.box.empty()) return 0;
  const Box3& b = spec.box;
  const long double euler = euler_product(EulerKind::Carefree, {2, 3}, prime_bound).value;
  auto pair_factor = [](long double l) { return l / (l + 2); };
  long double total = 0;
  if (spec.family == Family::C) {
    for (const auto& [a2, a4] : product_pairs(b.lo[2], b.hi[2])) {
      const long double q = static_cast<long double>(a2) / static_cast<long double>(a4);
      const long double s_lo = std::sqrt(to_ld(b.lo[0]) * q), s_hi = std::sqrt(to_ld(b.hi[0]) * q);
      for (long a3 = 1;; ++a3) {
        const Int P = pow_int(big(a2), 4) * pow_int(big(a3), 3) * pow_int(big(a4), 4);
        if (P > spec.n) break;
        const long double c3 = static_cast<long double>(a3) * a3 * a3 / q;
        const long double lo = std::max(s_lo, to_ld(b.lo[1]) * c3), hi = std::min(s_hi, to_ld(b.hi[1]) * c3);
        if (to_ld(b.lo[1]) * c3 > s_hi) break;
        if (hi <= lo || !is_squarefree(a2 * a3 * a4)) continue;
        const long double dens = ld(tables.m_table(spec.type, spec.sign, a2, a3, a4)) / kResidues2;
        const long double m = std::pow(to_ld(Rat(spec.n) / Rat(P)), 0.2L);
        total += dens * local_product(a2 * a3 * a4, pair_factor) * m / 2 * std::log(hi / lo);
      }
    }
    return euler * total;
  }
  const Int l3 = std::max(Int(1), ceil_rat(b.lo[2])), h3 = floor_rat(b.hi[2]);
  const long double logr = std::log(to_ld(b.hi[0]) / to_ld(b.lo[0]));
  for (const auto& [a2, a4] : product_pairs(b.lo[1], b.hi[1]))
    for (Int A3 = l3; A3 <= h3; ++A3) {
      const long a3 = A3.get_si();
      const Int P = pow_int(big(a2), 4) * pow_int(A3, 3) * pow_int(big(a4), 4);
      if (P > spec.n) break;
      if (!is_squarefree(a2 * a3 * a4)) continue;
      const long double dens = ld(tables.m_table(spec.type, spec.sign, a2, a3, a4)) / kResidues2;
      const long double m = std::pow(to_ld(Rat(spec.n) / Rat(P)), 0.2L);
      total += dens * local_product(a2 * a3 * a4, pair_factor) * m / 2 * logr;
    }
  return euler * total;
}

SlopeFit fit_slope(const std::vector<long double>& x, const std::vector<long double>& y) {
  SlopeFit f;
  f.points = static_cast<int>(x.size());
  if (x.size() < 2) return f;
  const long double k = static_cast<long double>(x.size());
  const long double mx = std::accumulate(x.begin(), x.end(), 0.0L) / k;
  const long double my = std::accumulate(y.begin(), y.end(), 0.0L) / k;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (x.size() > 2) {
    long double ssr = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const long double e = y[i] - f.intercept - f.slope * x[i];
      ssr += e * e;
    }
    f.std_error = std::sqrt(ssr / (k - 2) / sxx);
  }
  return f;
}

HarnessReport compare(const EnumSpec& spec, const std::vector<Int>& ladder, DensityTables& tables, long prime_bound) {
  for (std::size_t k = 1; k < ladder.size(); ++k)
    if (ladder[k] <= ladder[k - 1]) throw Error(ErrorCode::InvalidArgument, "ladder must be increasing");
  HarnessReport rep;
  rep.spec = spec;
  rep.spec.collect = false;
  const Box3& b = spec.box;
  long double mu_lit = 0, mu_norm = 0, linear = 0, fifth = 0;
  if (!b.empty()) {
    if (spec.family == Family::C) {
      MeasureSpec ms{MeasureKind::Mu, spec.type, spec.sign, MeasureMode::Literal, prime_bound};
      mu_lit = integrate_measure(tables, ms, b).value;
      ms.mode = MeasureMode::DensityNormalized;
      mu_norm = integrate_measure(tables, ms, b).value;
    } else {
      Box3 nb;
      nb.lo = {b.lo[0], b.lo[2], b.lo[1]};
      nb.hi = {b.hi[0], b.hi[2], b.hi[1]};
      MeasureSpec ms{MeasureKind::Nu, spec.type, spec.sign, MeasureMode::Literal, prime_bound};
      mu_lit = integrate_measure(tables, ms, nb).value;
      ms.mode = MeasureMode::DensityNormalized;
      mu_norm = integrate_measure(tables, ms, nb).value;
      const long double basic = euler_product(EulerKind::Basic, {2, 3}, prime_bound).value;
      const long double logr = std::log(to_ld(b.hi[0]) / to_ld(b.lo[0]));
      Rat s2 = 0;
      long double s5 = 0;
      const Int l3 = std::max(Int(1), ceil_rat(b.lo[2])), h3 = floor_rat(b.hi[2]);
      const Int l2 = std::max(Int(1), ceil_rat(b.lo[1])), h2 = floor_rat(b.hi[1]);
      for (Int A3 = l3; A3 <= h3; ++A3)
        for (Int N2 = l2; N2 <= h2; ++N2) {
          const long a3 = A3.get_si(), n = N2.get_si();
          s2 += beta(tables, spec.type, spec.sign, a3, n, true);
          if (!is_squarefree(a3 * n)) continue;
          long double inner = 0;
          for (long n1 = 1; n1 <= n; ++n1)
            if (n % n1 == 0) inner += ld(tables.m_table(spec.type, spec.sign, n1, a3, n / n1)) / kResidues2;
          const long double w = std::pow(std::pow(static_cast<long double>(n), 4) * std::pow(static_cast<long double>(a3), 3), 0.2L);
          s5 += inner * local_product(a3 * n, [](long double l) { return (l - 1) / (l + 1); }) / w;
        }
      linear = basic / 2592 * logr * to_ld(s2);
      fifth = 0.5L * logr * basic * s5;
    }
  }
  std::vector<long double> xs, ys;
  for (const Int& n : ladder) {
    EnumSpec s = rep.spec;
    s.n = n;
    const EnumResult r = enumerate(s);
    HarnessRow row;
    row.n = n;
    row.raw_count = r.raw_count;
    row.carefree_count = r.carefree_count;
    row.raw_predicted = raw_prediction(s);
    const long double root = fifth_root(n);
    row.measure_literal = root * mu_lit;
    row.measure_normalized = root * mu_norm;
    row.exact_local = exact_local_prediction(s, tables, prime_bound);
    if (spec.family == Family::T) {
      row.linear_literal = ld(n) * linear;
      row.fifth_root = root * fifth;
    }
    const long double cf = ld(r.carefree_count);
    row.ratio_normalized = row.measure_normalized > 0 ? cf / row.measure_normalized : 0;
    row.ratio_exact_local = row.exact_local > 0 ? cf / row.exact_local : 0;
    rep.rows.push_back(row);
    if (r.carefree_count > 0) {
      xs.push_back(std::log(ld(n)));
      ys.push_back(std::log(cf));
    }
  }
  rep.fit = fit_slope(xs, ys);
  const long double tol = std::max(2 * rep.fit.std_error, 0.05L);
  const long double d5 = std::fabs(rep.fit.slope - 0.2L), d1 = std::fabs(rep.fit.slope - 1);
  if (rep.fit.points >= 2 && d5 <= tol && d1 > 0.3L)
    rep.supported_exponent = "1/5";
  else if (rep.fit.points >= 2 && d1 <= tol && d5 > 0.3L)
    rep.supported_exponent = "1";
  else
    rep.supported_exponent = "undecided";
  return rep;
}

}  // namespace sextic
