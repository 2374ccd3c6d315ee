#include "sextic/densities.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace sextic {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

long mod(long x, long q) {
  long r = x % q;
  return r < 0 ? r + q : r;
}

long cap_val(long r, long p) {
  if (r == 0) return 2;
  long v = 0;
  while (v < 2 && r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

// Residue tables for a modulus q: r^k mod q for k = 0..5 and the capped p-adic valuation.
struct ResidueTables {
  long q;
  std::vector<std::array<long, 6>> pw;
  std::vector<long> v2, v3;
  explicit ResidueTables(long q_) : q(q_), pw(static_cast<std::size_t>(q_)), v2(static_cast<std::size_t>(q_)), v3(static_cast<std::size_t>(q_)) {
    for (long r = 0; r < q; ++r) {
      auto& p = pw[static_cast<std::size_t>(r)];
      p[0] = 1 % q;
      for (int k = 1; k < 6; ++k) p[k] = p[k - 1] * r % q;
      v2[static_cast<std::size_t>(r)] = q % 2 == 0 ? cap_val(r, 2) : 0;
      v3[static_cast<std::size_t>(r)] = q % 3 == 0 ? cap_val(r, 3) : 0;
    }
  }
  long p(long r, int k) const { return pw[static_cast<std::size_t>(r)][k]; }
};

const ResidueTables& tables64() {
  static const ResidueTables t(64);
  return t;
}
const ResidueTables& tables243() {
  static const ResidueTables t(243);
  return t;
}
const ResidueTables& tables15552() {
  static const ResidueTables t(15552);
  return t;
}

const std::vector<int>& a_cases() {
  static const std::vector<int> t = [] {
    std::vector<int> out(64, 0);
    for (long r = 0; r < 64; ++r)
      for (int i = 1; i <= 5; ++i)
        if (a_row(i, Int(r))) out[static_cast<std::size_t>(r)] = i;
    return out;
  }();
  return t;
}

const std::vector<int>& b_cases() {
  static const std::vector<int> t = [] {
    std::vector<int> out(243, 0);
    out[0] = 1;
    for (long r = 1; r < 243; ++r)
      for (int j = 1; j <= 4; ++j)
        if (b_row(j, Int(r))) out[static_cast<std::size_t>(r)] = j;
    return out;
  }();
  return t;
}

const std::vector<signed char>& type15552() {
  static const std::vector<signed char> t = [] {
    std::vector<signed char> out(15552, -1);
    for (long r = 0; r < 15552; ++r) {
      SexticType ty = classify_residue15552(r);
      if (ty.i != 0) out[static_cast<std::size_t>(r)] = static_cast<signed char>(ty.index());
    }
    return out;
  }();
  return t;
}

template <std::size_t K>
std::array<Int, K> to_ints(const std::array<long long, K>& c) {
  std::array<Int, K> out;
  for (std::size_t k = 0; k < K; ++k) out[k] = Int(std::to_string(c[k]));
  return out;
}

// Counts of free coordinates (given by `free_idx`) over (Z/q)^f; fixed coordinates in `fixed`.
template <std::size_t K>
std::array<long long, K> local_counts(const ResidueTables& tab, int sign, std::array<long, 5> fixed,
                                      const std::vector<int>& free_idx, long p, const std::vector<int>& cases) {
  const long q = tab.q;
  std::array<long long, K> out{};
  long base_m = mod(sign, q), base_v = 0;
  for (int k = 0; k < 5; ++k) {
    bool is_free = false;
    for (int f : free_idx) is_free |= f == k;
    if (is_free) continue;
    base_m = base_m * tab.p(mod(fixed[k], q), k + 1) % q;
    base_v += (p == 2 ? tab.v2 : tab.v3)[static_cast<std::size_t>(mod(fixed[k], q))];
  }
  if (base_v > 1) return out;
  const auto& vv = p == 2 ? tab.v2 : tab.v3;
  const int e0 = free_idx[0] + 1, e1 = free_idx[1] + 1;
  if (free_idx.size() == 3) {
    const int e2 = free_idx[2] + 1;
    for (long x = 0; x < q; ++x) {
      const long vx = base_v + vv[static_cast<std::size_t>(x)];
      if (vx > 1) continue;
      const long mx = base_m * tab.p(x, e0) % q;
      for (long y = 0; y < q; ++y) {
        const long vy = vx + vv[static_cast<std::size_t>(y)];
        if (vy > 1) continue;
        const long my = mx * tab.p(y, e1) % q;
        for (long z = 0; z < q; ++z) {
          if (vy + vv[static_cast<std::size_t>(z)] > 1) continue;
          const int c = cases[static_cast<std::size_t>(my * tab.p(z, e2) % q)];
          if (c) ++out[static_cast<std::size_t>(c - 1)];
        }
      }
    }
  } else {
    for (long x = 0; x < q; ++x) {
      const long vx = base_v + vv[static_cast<std::size_t>(x)];
      if (vx > 1) continue;
      const long mx = base_m * tab.p(x, e0) % q;
      for (long y = 0; y < q; ++y) {
        if (vx + vv[static_cast<std::size_t>(y)] > 1) continue;
        const int c = cases[static_cast<std::size_t>(mx * tab.p(y, e1) % q)];
        if (c) ++out[static_cast<std::size_t>(c - 1)];
      }
    }
  }
  return out;
}

Int ipow(long b, unsigned long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

std::string key(std::initializer_list<long> parts) {
  std::string out;
  for (long p : parts) {
    if (!out.empty()) out += ':';
    out += std::to_string(p);
  }
  return out;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
}

}  // namespace

bool is_squarefree(long n) {
  if (n <= 0) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool omega_member(long l, const std::array<long, 5>& a) {
  int divisible = 0;
  for (long x : a) divisible += mod(x, l) == 0;
  return divisible <= 1;
}

bool omega_member_pairwise(long l, const std::array<long, 5>& a) {
  const long q = l * l;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (mod(a[i], q) * mod(a[j], q) % q == 0) return false;
  return true;
}

Int omega_count_closed(long l) {
  const Int u = Int(l) * l - l;
  return u * u * u * u * u + 5 * Int(l) * u * u * u * u;
}

Int omega_count_product_form(long l) {
  // l^10 (1 - 1/l)^4 (1 + 4/l) = l^5 (l - 1)^4 (l + 4)
  Rat v = Rat(ipow(l, 10)) * Rat(l - 1, l) * Rat(l - 1, l) * Rat(l - 1, l) * Rat(l - 1, l) * Rat(l + 4, l);
  v.canonicalize();
  if (!is_integer(v)) throw Error(ErrorCode::Internal, "product form is not integral");
  return v.get_num();
}

namespace {

Int omega_exhaustive(long l, bool pairwise) {
  const long q = l * l;
  long long count = 0;
  std::array<long, 5> a{};
  for (a[0] = 0; a[0] < q; ++a[0])
    for (a[1] = 0; a[1] < q; ++a[1])
      for (a[2] = 0; a[2] < q; ++a[2])
        for (a[3] = 0; a[3] < q; ++a[3])
          for (a[4] = 0; a[4] < q; ++a[4])
            count += pairwise ? omega_member_pairwise(l, a) : omega_member(l, a);
  return Int(std::to_string(count));
}

}  // namespace

Int omega_count_exhaustive(long l) { return omega_exhaustive(l, false); }
Int omega_count_pairwise_exhaustive(long l) { return omega_exhaustive(l, true); }

int a_case_mod64(long r) { return a_cases()[static_cast<std::size_t>(mod(r, 64))]; }
int b_case_mod243(long r) { return b_cases()[static_cast<std::size_t>(mod(r, 243))]; }

namespace {

template <class F>
bool omega_p_member(const ResidueTables& tab, long p, int sign, const std::array<long, 5>& a, F&& case_of, int want) {
  long v = 0, m = mod(sign, tab.q);
  for (int k = 0; k < 5; ++k) {
    const long r = mod(a[k], tab.q);
    v += (p == 2 ? tab.v2 : tab.v3)[static_cast<std::size_t>(r)];
    m = m * tab.p(r, k + 1) % tab.q;
  }
  return v <= 1 && case_of(m) == want;
}

}  // namespace

bool omega2_member(int i, int sign, const std::array<long, 5>& a) {
  return omega_p_member(tables64(), 2, sign, a, a_case_mod64, i);
}

bool omega3_member(int j, int sign, const std::array<long, 5>& a) {
  return omega_p_member(tables243(), 3, sign, a, b_case_mod243, j);
}

DensityTables::DensityTables(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty())
    if (const char* env = std::getenv("SEXTIC_CACHE_DIR")) dir_ = env;
  load();
}

DensityTables::~DensityTables() {
  try {
    flush();
  } catch (...) {
  }
}

template <std::size_t K>
void DensityTables::load_file(const std::string& name, Store<K>& store) {
  const fs::path path = fs::path(dir_) / name;
  if (!fs::exists(path)) return;
  std::ifstream in(path);
  Store<K> loaded;
  try {
    json j;
    in >> j;
    if (j.value("schema", 0) != 1) return;
    for (const auto& e : j.at("entries")) {
      std::array<Int, K> counts;
      const auto& c = e.at("counts");
      if (c.size() != K) return;
      for (std::size_t k = 0; k < K; ++k) counts[k] = Int(c[k].get<std::string>());
      loaded[e.at("key").get<std::string>()] = counts;
    }
  } catch (const std::exception&) {
    return;  // a damaged cache is rebuilt on demand
  }
  store.merge(loaded);
}

template <std::size_t K>
void DensityTables::save_file(const std::string& name, const Store<K>& store, long modulus) const {
  json j;
  j["schema"] = 1;
  j["kind"] = name.substr(0, name.find('.'));
  j["modulus"] = modulus;
  j["entries"] = json::array();
  for (const auto& [k, counts] : store) {
    json c = json::array();
    for (const Int& x : counts) c.push_back(x.get_str());
    j["entries"].push_back({{"key", k}, {"counts", c}});
  }
  fs::create_directories(dir_);
  const fs::path path = fs::path(dir_) / name;
  const fs::path tmp = fs::path(dir_) / (name + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << j.dump(1) << '\n';
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void DensityTables::load() {
  if (dir_.empty()) return;
  load_file("n2.json", n2_);
  load_file("n3.json", n3_);
  load_file("m2.json", m2_);
  load_file("m3.json", m3_);
}

void DensityTables::flush() {
  std::lock_guard<std::mutex> lock(mu_);
  if (dir_.empty() || !dirty_) return;
  save_file("n2.json", n2_, 64);
  save_file("n3.json", n3_, 243);
  save_file("m2.json", m2_, 64);
  save_file("m3.json", m3_, 243);
  dirty_ = false;
}

std::array<Int, 5> DensityTables::n2(int sign, long a2, long a4) {
  check_sign(sign);
  const Key k = key({sign, mod(a2, 64), mod(a4, 64)});
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = n2_.find(k); it != n2_.end()) return it->second;
  auto c = to_ints(local_counts<5>(tables64(), sign, {0, a2, 0, a4, 0}, {0, 2, 4}, 2, a_cases()));
  n2_[k] = c;
  dirty_ = true;
  return c;
}

std::array<Int, 4> DensityTables::n3(int sign, long a2, long a4) {
  check_sign(sign);
  const Key k = key({sign, mod(a2, 243), mod(a4, 243)});
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = n3_.find(k); it != n3_.end()) return it->second;
  auto c = to_ints(local_counts<4>(tables243(), sign, {0, a2, 0, a4, 0}, {0, 2, 4}, 3, b_cases()));
  n3_[k] = c;
  dirty_ = true;
  return c;
}

std::array<Int, 5> DensityTables::m2(int sign, long a2, long a3, long a4) {
  check_sign(sign);
  const Key k = key({sign, mod(a2, 64), mod(a3, 64), mod(a4, 64)});
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = m2_.find(k); it != m2_.end()) return it->second;
  auto c = to_ints(local_counts<5>(tables64(), sign, {0, a2, a3, a4, 0}, {0, 4}, 2, a_cases()));
  m2_[k] = c;
  dirty_ = true;
  return c;
}

std::array<Int, 4> DensityTables::m3(int sign, long a2, long a3, long a4) {
  check_sign(sign);
  const Key k = key({sign, mod(a2, 243), mod(a3, 243), mod(a4, 243)});
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = m3_.find(k); it != m3_.end()) return it->second;
  auto c = to_ints(local_counts<4>(tables243(), sign, {0, a2, a3, a4, 0}, {0, 4}, 3, b_cases()));
  m3_[k] = c;
  dirty_ = true;
  return c;
}

Int DensityTables::n_table(const SexticType& t, int sign, long a2, long a4) {
  if (a2 < 1 || a4 < 1 || !is_squarefree(a2 * a4))
    throw Error(ErrorCode::InvalidPair, "a2*a4 must be a positive squarefree integer");
  return n2(sign, a2, a4)[static_cast<std::size_t>(t.i - 1)] * n3(sign, a2, a4)[static_cast<std::size_t>(t.j - 1)];
}

Int DensityTables::m_table(const SexticType& t, int sign, long a2, long a3, long a4) {
  return m2(sign, a2, a3, a4)[static_cast<std::size_t>(t.i - 1)] * m3(sign, a2, a3, a4)[static_cast<std::size_t>(t.j - 1)];
}

std::array<Int, 5> n2_slice(int sign, long a2, long a4, long a5) {
  check_sign(sign);
  return to_ints(local_counts<5>(tables64(), sign, {0, a2, 0, a4, a5}, {0, 2}, 2, a_cases()));
}

std::array<Int, 4> n3_slice(int sign, long a2, long a4, long a5) {
  check_sign(sign);
  return to_ints(local_counts<4>(tables243(), sign, {0, a2, 0, a4, a5}, {0, 2}, 3, b_cases()));
}

namespace {

Int direct15552(const SexticType& t, int sign, std::array<long, 5> fixed, int f0, int f1) {
  check_sign(sign);
  const auto& tab = tables15552();
  const auto& ty = type15552();
  const long q = 15552;
  const signed char want = static_cast<signed char>(t.index());
  long base = mod(sign, q), b2 = 0, b3 = 0;
  for (int k = 0; k < 5; ++k) {
    if (k == f0 || k == f1) continue;
    const long r = mod(fixed[k], q);
    base = base * tab.p(r, k + 1) % q;
    b2 += tab.v2[static_cast<std::size_t>(r)];
    b3 += tab.v3[static_cast<std::size_t>(r)];
  }
  long long count = 0;
  if (b2 > 1 || b3 > 1) return 0;
  for (long x = 0; x < q; ++x) {
    const long x2 = b2 + tab.v2[static_cast<std::size_t>(x)], x3 = b3 + tab.v3[static_cast<std::size_t>(x)];
    if (x2 > 1 || x3 > 1) continue;
    const long mx = base * tab.p(x, f0 + 1) % q;
    for (long y = 0; y < q; ++y) {
      if (x2 + tab.v2[static_cast<std::size_t>(y)] > 1 || x3 + tab.v3[static_cast<std::size_t>(y)] > 1) continue;
      if (ty[static_cast<std::size_t>(mx * tab.p(y, f1 + 1) % q)] == want) ++count;
    }
  }
  return Int(std::to_string(count));
}

}  // namespace

Int n_slice_direct15552(const SexticType& t, int sign, long a2, long a4, long a5) {
  return direct15552(t, sign, {0, a2, 0, a4, a5}, 0, 2);
}

Int m_table_direct15552(const SexticType& t, int sign, long a2, long a3, long a4) {
  return direct15552(t, sign, {0, a2, a3, a4, 0}, 0, 4);
}

LocalRatio local_ratio(long l, int free_coords, bool carefree_model) {
  if (l < 5) throw Error(ErrorCode::InvalidArgument, "local ratio needs l >= 5");
  if (free_coords != 2 && free_coords != 3) throw Error(ErrorCode::InvalidArgument, "free_coords must be 2 or 3");
  const long q = l * l;
  auto admissible = [&](const std::array<long, 5>& a) {
    if (!carefree_model) return omega_member(l, a);
    for (long x : a)
      if (mod(x, q) == 0) return false;
    return omega_member(l, a);
  };
  auto count = [&](std::array<long, 5> a) {
    long long c = 0;
    std::vector<int> free = free_coords == 3 ? std::vector<int>{0, 2, 4} : std::vector<int>{0, 4};
    if (free.size() == 3) {
      for (a[0] = 0; a[0] < q; ++a[0])
        for (a[2] = 0; a[2] < q; ++a[2])
          for (a[4] = 0; a[4] < q; ++a[4]) c += admissible(a);
    } else {
      for (a[0] = 0; a[0] < q; ++a[0])
        for (a[4] = 0; a[4] < q; ++a[4]) c += admissible(a);
    }
    return Int(std::to_string(c));
  };
  LocalRatio r;
  r.l = l;
  r.free_coords = free_coords;
  r.carefree_model = carefree_model;
  r.coprime_count = count({0, 1, 1, 1, 0});
  r.divisible_count = count({0, l, 1, 1, 0});
  r.ratio = Rat(r.divisible_count, r.coprime_count);
  r.ratio.canonicalize();
  r.predicted_plus2 = rat(l - 1, l + 2);
  r.predicted_plus1 = rat(l - 1, l + 1);
  return r;
}

std::vector<long> primes_up_to(long bound) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(bound); it != cache.end()) return it->second;
  std::vector<char> composite(static_cast<std::size_t>(bound + 1), 0);
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long k = p * p; k <= bound; k += p) composite[static_cast<std::size_t>(k)] = 1;
  }
  cache[bound] = out;
  return out;
}

EulerProduct euler_product(EulerKind kind, const std::vector<long>& exclude, long prime_bound) {
  if (prime_bound < 5) throw Error(ErrorCode::InvalidArgument, "prime bound must be at least 5");
  EulerProduct e;
  e.prime_bound = prime_bound;
  long double v = 1;
  for (long p : primes_up_to(prime_bound)) {
    bool skip = false;
    for (long x : exclude) skip |= x == p;
    if (skip) continue;
    const long double l = static_cast<long double>(p);
    v *= kind == EulerKind::Carefree ? 1.0L - 3.0L / (l * l) + 2.0L / (l * l * l) : 1.0L - 1.0L / (l * l);
  }
  e.value = v;
  e.tail_bound = (kind == EulerKind::Carefree ? 3.0L : 1.0L) / static_cast<long double>(prime_bound);
  return e;
}

long double PowerTerm::value() const { return to_ld(coeff) * std::pow(static_cast<long double>(base.get_d()), to_ld(exponent)); }

long double AlphaValue::value() const {
  long double v = 0;
  for (const auto& t : terms) v += t.value();
  return v;
}

AlphaValue alpha(DensityTables& tables, const SexticType& t, int sign, long n) {
  AlphaValue out;
  if (!is_squarefree(n)) return out;
  Rat ratio = 1;
  for (long l : prime_factors(n))
    if (l != 2 && l != 3) ratio *= rat(l - 1, l + 2);
  for (long n1 = 1; n1 <= n; ++n1) {
    if (n % n1) continue;
    const long n2 = n / n1;
    Rat c = ratio * Rat(tables.n_table(t, sign, n1, n2)) / Rat(n2);
    c.canonicalize();
    out.terms.push_back({c, Int(n1), rat(-3, 5)});
  }
  return out;
}

Rat beta(DensityTables& tables, const SexticType& t, int sign, long m, long n, bool plus2) {
  if (!is_squarefree(m * n)) return 0;
  Rat ratio = 1;
  for (long l : prime_factors(m * n))
    if (l != 2 && l != 3) ratio *= plus2 ? rat(l - 1, l + 2) : rat(l - 1, l + 1);
  Rat sum = 0;
  for (long n1 = 1; n1 <= n; ++n1) {
    if (n % n1) continue;
    sum += Rat(tables.m_table(t, sign, n1, m, n / n1));
  }
  Rat out = ratio * sum / Rat(ipow(n, 4) * ipow(m, 3));
  out.canonicalize();
  return out;
}

MeasureValue integrate_measure(DensityTables& tables, const MeasureSpec& spec, const Box3& box) {
  MeasureValue out;
  if (box.empty()) return out;
  for (int a = 0; a < 3; ++a)
    if (box.lo[a] == box.hi[a]) return out;
  if (spec.kind == MeasureKind::Mu) {
    if (box.lo[0] < 0 || box.lo[1] <= 0) throw Error(ErrorCode::InvalidArgument, "mu box needs x1 >= 0 and x2 > 0");
    const EulerProduct e = euler_product(EulerKind::Carefree, {2, 3}, spec.prime_bound);
    const long double i1 = 15.0L * (std::pow(to_ld(box.hi[0]), 1.0L / 15) - std::pow(to_ld(box.lo[0]), 1.0L / 15));
    const long double i2 = 7.5L * (std::pow(to_ld(box.lo[1]), -2.0L / 15) - std::pow(to_ld(box.hi[1]), -2.0L / 15));
    long double s = 0;
    for (Int n = std::max(Int(1), ceil_rat(box.lo[2])); n <= floor_rat(box.hi[2]); ++n)
      s += alpha(tables, spec.type, spec.sign, n.get_si()).value();
    long double c = e.value / 559872.0L;
    if (spec.mode == MeasureMode::DensityNormalized) c *= 46656.0L / std::pow(15552.0L, 3);
    out.value = c * i1 * i2 * s;
    out.error_bound = std::fabs(out.value) * e.tail_bound;
    return out;
  }
  if (box.lo[0] <= 0) throw Error(ErrorCode::InvalidArgument, "nu box needs x1 > 0");
  const EulerProduct e = euler_product(EulerKind::Basic, {2, 3}, spec.prime_bound);
  const long double i1 = std::log(to_ld(box.hi[0]) / to_ld(box.lo[0]));
  Rat s = 0;
  for (Int x2 = std::max(Int(1), ceil_rat(box.lo[1])); x2 <= floor_rat(box.hi[1]); ++x2)
    for (Int x3 = std::max(Int(1), ceil_rat(box.lo[2])); x3 <= floor_rat(box.hi[2]); ++x3)
      s += beta(tables, spec.type, spec.sign, x2.get_si(), x3.get_si());
  long double c = e.value / 2592.0L;
  if (spec.mode == MeasureMode::DensityNormalized) c *= 1296.0L / (15552.0L * 15552.0L);
  out.value = c * i1 * to_ld(s);
  out.error_bound = std::fabs(out.value) * e.tail_bound;
  return out;
}

}  // namespace sextic
