#include "sextic/general_basis.hpp"

namespace sextic {

namespace {

Int ipow(const Int& b, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

Int mod_pos(const Int& x, const Int& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
  return r;
}

}  // namespace

WildData wild_data(int n, const Int& m) {
  PureTuple tuple = decompose_general(n, m);
  if (!assumption_holds(n, m))
    throw Error(ErrorCode::AssumptionViolated, "m = " + m.get_str() + " violates the valuation assumption at a prime dividing n");
  WildData w;
  w.n = n;
  w.m = m;
  w.c = big_c_general(tuple);
  for (auto& [p, s] : factorize(Int(n))) {
    Int x = ipow(m, p.get_ui() - 1) - 1;
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "m^(p-1) = 1");
    const long r = static_cast<long>(valuation(x, p)) - 1;
    if (r <= 0) continue;
    w.primes.push_back({p, s, r, static_cast<unsigned>(std::min<long>(r, s))});
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  w.entries.assign(w.primes.size(), std::vector<WildEntry>(nn));
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    const WildPrime& wp = w.primes[i];
    const long p = wp.p.get_si();
    for (long t = 0; t < n; ++t) {
      WildEntry& e = w.entries[i][static_cast<std::size_t>(t)];
      long pk = 1;
      unsigned k = 0;
      while (k < wp.d && t >= n - n / (pk * p)) {
        pk *= p;
        ++k;
      }
      e.k = k;
      e.n_it = n / pk;
      e.j = t - (n - e.n_it);
      if (k == 0) continue;
      const Int mod_k1 = ipow(wp.p, k + 1);
      const Int mod_k = ipow(wp.p, k);
      mpz_powm_ui(e.b_prime.get_mpz_t(), mod_pos(m, mod_k1).get_mpz_t(), static_cast<unsigned long>(p - 2), mod_k1.get_mpz_t());
      if (mod_pos(Int(m * e.b_prime), mod_k1) != 1) throw Error(ErrorCode::Internal, "b' is not an inverse of m");
      e.a_prime = k < wp.s ? ipow(e.b_prime, ipow(wp.p, wp.s - 1 - k).get_ui()) : e.b_prime;
      Int base = mod_pos(Int(w.c[static_cast<std::size_t>(t)] * ipow(e.a_prime, static_cast<unsigned long>(pk - 1))), mod_k);
      if (mpz_invert(e.w.get_mpz_t(), base.get_mpz_t(), mod_k.get_mpz_t()) == 0) {
        if (mod_k == 1) e.w = 0;
        else throw Error(ErrorCode::Internal, "w has no solution");
      }
      PureNum sum(n, m);
      const PureNum step = PureNum::theta_power(n, m, static_cast<int>(e.n_it)) * Rat(e.a_prime);
      PureNum term = PureNum::constant(n, m, 1);
      for (long r = 0; r <= pk - 2; ++r) {
        sum += term;
        term *= step;
      }
      e.delta = PureNum::theta_power(n, m, static_cast<int>(e.j)) * sum * Rat(Int(e.w * w.c[static_cast<std::size_t>(t)]));
      if (e.delta.top() >= t) throw Error(ErrorCode::Internal, "delta has a power of theta not below t");
    }
  }
  w.beta.assign(nn, PureNum(n, m));
  for (long t = 0; t < n; ++t) {
    std::vector<std::size_t> st;
    for (std::size_t i = 0; i < w.primes.size(); ++i)
      if (w.entries[i][static_cast<std::size_t>(t)].k >= 1) st.push_back(i);
    if (st.empty()) continue;
    for (std::size_t i : st) {
      Int z = 1;
      for (std::size_t o : st)
        if (o != i) z *= ipow(w.primes[o].p, w.entries[o][static_cast<std::size_t>(t)].k);
      w.entries[i][static_cast<std::size_t>(t)].z = z;
    }
    Int g = w.entries[st[0]][static_cast<std::size_t>(t)].z;
    std::vector<Int> u{1};
    for (std::size_t q = 1; q < st.size(); ++q) {
      Int g2, s, v;
      const Int& z = w.entries[st[q]][static_cast<std::size_t>(t)].z;
      mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
      for (Int& x : u) x *= s;
      u.push_back(v);
      g = g2;
    }
    if (g != 1) throw Error(ErrorCode::Internal, "z_{i,t} are not coprime");
    PureNum beta(n, m);
    for (std::size_t q = 0; q < st.size(); ++q) {
      WildEntry& e = w.entries[st[q]][static_cast<std::size_t>(t)];
      e.u = u[q];
      beta += e.delta * Rat(Int(e.u * e.z));
    }
    w.beta[static_cast<std::size_t>(t)] = beta;
  }
  return w;
}

std::vector<PureNum> general_integral_basis(const WildData& w) {
  std::vector<PureNum> out;
  for (int t = 0; t < w.n; ++t) {
    const std::size_t ts = static_cast<std::size_t>(t);
    if (t == 0) {
      out.push_back(PureNum::constant(w.n, w.m, 1));
      continue;
    }
    Int den = w.c[ts];
    for (std::size_t i = 0; i < w.primes.size(); ++i) den *= ipow(w.primes[i].p, w.entries[i][ts].k);
    out.push_back((PureNum::theta_power(w.n, w.m, t) + w.beta[ts]) / Rat(den));
  }
  return out;
}

std::vector<PureNum> general_integral_basis(int n, const Int& m) { return general_integral_basis(wild_data(n, m)); }

bool same_lattice(const std::vector<PureNum>& a, const std::vector<PureNum>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  RatMatrix t = inverse(coefficient_matrix(a)) * coefficient_matrix(b);
  if (!is_integral(t)) return false;
  Rat d = det(t);
  return d == 1 || d == -1;
}

std::vector<RadicalMonomial> general_shape_params(const PureTuple& t) {
  const int n = t.n;
  std::vector<RadicalMonomial> out;
  for (int i = 1; i <= n / 2; ++i) {
    RadicalMonomial mono;
    for (int j = 1; j < n; ++j) mono.exps.push_back(Rat(2 * i * j - 2 * n * ((i * j) / n) - n, n));
    for (auto& e : mono.exps) e.canonicalize();
    out.push_back(mono);
  }
  return out;
}

}  // namespace sextic
