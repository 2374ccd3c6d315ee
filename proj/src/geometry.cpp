#include "sextic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sextic {

bool Box3::empty() const {
  for (int i = 0; i < 3; ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int iroot_floor(const Rat& x, unsigned k) {
  if (x < 0) throw Error(ErrorCode::InvalidArgument, "root of a negative number");
  Int f = floor_rat(x), r;
  mpz_root(r.get_mpz_t(), f.get_mpz_t(), k);
  return r;
}

long double to_ld(const Rat& x) {
  // ratio of two doubles loses nothing that matters at these magnitudes
  return static_cast<long double>(x.get_num().get_d()) / static_cast<long double>(x.get_den().get_d());
}

namespace {

Int pow5(const Int& x) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), 5);
  return out;
}

Int cube(const Int& x) { return x * x * x; }

}  // namespace

long double volume_V(const RegionM3& r) {
  if (r.l1p >= r.l1 || r.l2p >= r.l2 || r.n <= 0) return 0;
  const long double e = 2.0L / 15.0L;
  const long double l2p = r.l2p == 0 ? INFINITY : std::pow(to_ld(r.l2p), -e);
  return 75.0L / 8.0L * std::pow(to_ld(r.n), 0.2L) * (std::pow(to_ld(r.l1), e) - std::pow(to_ld(r.l1p), e)) *
         (l2p - std::pow(to_ld(r.l2), -e));
}

Int count_lattice_M3(const RegionM3& r) {
  Int total = 0;
  if (r.n < 1) return total;
  for (Int x1 = 1;; ++x1) {
    const Int base_lo = std::max(Int(1), ceil_rat(r.l1p * x1));
    if (pow5(x1) * pow5(base_lo) > r.n) break;
    const Int hi1 = floor_rat(r.l1 * x1);
    for (Int x3 = 1;; ++x3) {
      const Int c3 = cube(x3);
      const Int lo = std::max(base_lo, ceil_rat(r.l2p * c3 * x1));
      if (pow5(x1) * c3 * pow5(lo) > r.n) break;
      if (r.l2p > 0 && r.l2p * c3 > r.l1) break;
      Int hi = std::min(hi1, floor_rat(r.l2 * c3 * x1));
      hi = std::min(hi, iroot_floor(r.n / Rat(pow5(x1) * c3), 5));
      if (hi >= lo) total += hi - lo + 1;
    }
  }
  return total;
}

Int count_lattice_M3_brute(const RegionM3& r) {
  Int total = 0;
  if (r.n < 1) return total;
  const Int lim = iroot_floor(r.n, 5);
  for (Int x1 = 1; x1 <= lim; ++x1)
    for (Int x3 = 1; pow5(x1) * cube(x3) <= r.n; ++x3)
      for (Int x5 = 1; pow5(x1) * cube(x3) * pow5(x5) <= r.n; ++x5) {
        const Rat u(x5, x1), v(x5, x1 * cube(x3));
        if (u >= r.l1p && u <= r.l1 && v >= r.l2p && v <= r.l2) ++total;
      }
  return total;
}

long double area_A(const Rat& m, const Rat& l1p, const Rat& l1) {
  if (l1p <= 0 || l1 < l1p) throw Error(ErrorCode::InvalidArgument, "need 0 < L1' <= L1");
  return to_ld(m) / 2.0L * std::log(to_ld(l1) / to_ld(l1p));
}

Int count_lattice_M2(const Rat& m, const Rat& l1p, const Rat& l1) {
  Int total = 0;
  for (Int x1 = 1;; ++x1) {
    const Int lo = std::max(Int(1), ceil_rat(l1p * x1));
    if (x1 * lo > m) break;
    const Int hi = std::min(floor_rat(l1 * x1), floor_rat(m / Rat(x1)));
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

Int count_lattice_M2_brute(const Rat& m, const Rat& l1p, const Rat& l1) {
  Int total = 0;
  const Int lim = floor_rat(m);
  for (Int x1 = 1; x1 <= lim; ++x1)
    for (Int x5 = 1; x1 * x5 <= m; ++x5) {
      const Rat u(x5, x1);
      if (u >= l1p && u <= l1) ++total;
    }
  return total;
}

MonteCarloEstimate monte_carlo_M3(const RegionM3& r, std::uint64_t samples, std::uint64_t seed) {
  if (r.l1p <= 0 || r.l2p <= 0) throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs L1' > 0 and L2' > 0");
  const long double n = to_ld(r.n), l1p = to_ld(r.l1p), l1 = to_ld(r.l1), l2p = to_ld(r.l2p), l2 = to_ld(r.l2);
  const long double x1max = std::pow(n * l2 / std::pow(l1p, 6.0L), 0.1L);
  const long double x3max = std::cbrt(l1 / l2p);
  const long double x5max = l1 * x1max;
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const long double x1 = x1max * unit(gen), x3 = x3max * unit(gen), x5 = x5max * unit(gen);
    const long double u = x5 / x1, v = x5 / (x3 * x3 * x3 * x1);
    if (u < l1p || u > l1 || v < l2p || v > l2) continue;
    if (std::pow(x1 * x5, 5.0L) * x3 * x3 * x3 > n) continue;
    ++hits;
  }
  MonteCarloEstimate out;
  const long double vol = x1max * x3max * x5max;
  const long double p = static_cast<long double>(hits) / static_cast<long double>(samples);
  out.samples = samples;
  out.value = p * vol;
  out.std_error = vol * std::sqrt(p * (1 - p) / static_cast<long double>(samples));
  return out;
}

namespace {

void finish(ErrorLaw& law) {
  long double lo = INFINITY, hi = 0;
  for (const auto& row : law.rows) {
    lo = std::min(lo, row.scaled_error);
    hi = std::max(hi, row.scaled_error);
  }
  law.spread = lo > 0 ? hi / lo : INFINITY;
}

}  // namespace

ErrorLaw error_law_M3(const std::vector<Rat>& ns, const Rat& l1p, const Rat& l1, const Rat& l2p, const Rat& l2) {
  ErrorLaw law;
  for (const Rat& n : ns) {
    RegionM3 r{n, l1p, l1, l2p, l2};
    ErrorLawRow row{n, count_lattice_M3(r), volume_V(r), 0};
    row.scaled_error = std::fabs(to_ld(Rat(row.count)) - row.main_term) / std::pow(to_ld(n), 0.1L);
    law.rows.push_back(row);
  }
  finish(law);
  return law;
}

ErrorLaw error_law_M2(const std::vector<Rat>& ms, const Rat& l1p, const Rat& l1) {
  ErrorLaw law;
  for (const Rat& m : ms) {
    ErrorLawRow row{m, count_lattice_M2(m, l1p, l1), area_A(m, l1p, l1), 0};
    row.scaled_error = std::fabs(to_ld(Rat(row.count)) - row.main_term) / std::sqrt(to_ld(m));
    law.rows.push_back(row);
  }
  finish(law);
  return law;
}

}  // namespace sextic
