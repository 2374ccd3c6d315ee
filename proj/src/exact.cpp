#include "sextic/exact.hpp"

#include <mpfr.h>

#include <sstream>

namespace sextic {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RadicandMismatch: return "RadicandMismatch";
    case ErrorCode::NotSixthPowerFree: return "NotSixthPowerFree";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::Unclassifiable: return "UnclassifiableInput";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::AuxUndefined: return "AuxUndefined";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "not a rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }
bool is_integer(const Rat& x) { return x.get_den() == 1; }

RatInterval operator+(const RatInterval& x, const RatInterval& y) { return {x.lo + y.lo, x.hi + y.hi}; }

RatInterval operator*(const RatInterval& x, const RatInterval& y) {
  Rat p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  RatInterval out{p[0], p[0]};
  for (const Rat& v : p) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

RatInterval real_root_enclosure(const Int& x, unsigned r, unsigned bits) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
  if (x < 0 && r % 2 == 0) throw Error(ErrorCode::InvalidArgument, "even root of a negative number");
  Int ax = abs(x);
  Int scaled = ax << (bits * r);
  Int lo;
  mpz_root(lo.get_mpz_t(), scaled.get_mpz_t(), r);
  Int den = Int(1) << bits;
  Rat l(lo, den), h(Int(lo + 1), den);
  l.canonicalize();
  h.canonicalize();
  Int check;
  mpz_pow_ui(check.get_mpz_t(), lo.get_mpz_t(), r);
  if (check == scaled) h = l;
  if (x < 0) return {-h, -l};
  return {l, h};
}

CubicNum::CubicNum(const Int& radicand, const Rat& q0, const Rat& q1, const Rat& q2)
    : radicand_(radicand), q_{q0, q1, q2} {
  if (radicand_ == 0 && (q1 != 0 || q2 != 0)) throw Error(ErrorCode::InvalidArgument, "cubic number without radicand");
}

CubicNum CubicNum::root(const Int& radicand) {
  if (radicand == 0) throw Error(ErrorCode::InvalidArgument, "zero radicand");
  return CubicNum(radicand, 0, 1, 0);
}

bool CubicNum::is_zero() const { return q_[0] == 0 && q_[1] == 0 && q_[2] == 0; }

void CubicNum::adopt(const CubicNum& y) {
  if (y.radicand_ == 0 || y.radicand_ == radicand_) return;
  if (radicand_ == 0) {
    radicand_ = y.radicand_;
    return;
  }
  throw Error(ErrorCode::RadicandMismatch, "radicand mismatch: " + radicand_.get_str() + " vs " + y.radicand_.get_str());
}

CubicNum CubicNum::operator-() const {
  CubicNum out = *this;
  for (auto& q : out.q_) q = -q;
  return out;
}

CubicNum& CubicNum::operator+=(const CubicNum& y) {
  adopt(y);
  for (int i = 0; i < 3; ++i) q_[i] += y.q_[i];
  return *this;
}

CubicNum& CubicNum::operator-=(const CubicNum& y) {
  adopt(y);
  for (int i = 0; i < 3; ++i) q_[i] -= y.q_[i];
  return *this;
}

CubicNum& CubicNum::operator*=(const CubicNum& y) {
  adopt(y);
  const Rat m(radicand_);
  const auto& a = q_;
  const auto& b = y.q_;
  Rat r0 = a[0] * b[0] + m * (a[1] * b[2] + a[2] * b[1]);
  Rat r1 = a[0] * b[1] + a[1] * b[0] + m * a[2] * b[2];
  Rat r2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  q_ = {r0, r1, r2};
  return *this;
}

CubicNum& CubicNum::operator/=(const Rat& y) {
  if (y == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  for (auto& q : q_) q /= y;
  return *this;
}

bool operator==(const CubicNum& x, const CubicNum& y) {
  if (x.is_rational() || y.is_rational()) return x.is_rational() && y.is_rational() && x.q_[0] == y.q_[0];
  if (x.radicand_ != y.radicand_) throw Error(ErrorCode::RadicandMismatch, "comparing cubic numbers over different radicands");
  return x.q_ == y.q_;
}

RatInterval CubicNum::enclose(unsigned bits) const {
  if (is_rational()) return {q_[0], q_[0]};
  RatInterval c = real_root_enclosure(radicand_, 3, bits);
  RatInterval c2 = c * c;
  RatInterval out{q_[0], q_[0]};
  out = out + RatInterval{q_[1], q_[1]} * c;
  out = out + RatInterval{q_[2], q_[2]} * c2;
  return out;
}

int CubicNum::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(q_[0]);
  for (unsigned bits = 64;; bits *= 2) {
    RatInterval iv = enclose(bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (bits > (1u << 20)) throw Error(ErrorCode::Internal, "sign refinement did not terminate");
  }
}

double CubicNum::to_double() const {
  RatInterval iv = enclose(80);
  return Rat((iv.lo + iv.hi) / 2).get_d();
}

namespace {

std::string mpfr_decimal(mpfr_t x, int digits) {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

std::string CubicNum::decimal(int digits) const {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t c, acc, t, q;
  mpfr_inits2(prec, c, acc, t, q, (mpfr_ptr)0);
  mpfr_set_z(c, radicand_.get_mpz_t(), MPFR_RNDN);
  mpfr_cbrt(c, c, MPFR_RNDN);
  mpfr_set_q(acc, q_[0].get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(q, q_[1].get_mpq_t(), MPFR_RNDN);
  mpfr_mul(t, q, c, MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  mpfr_set_q(q, q_[2].get_mpq_t(), MPFR_RNDN);
  mpfr_mul(t, c, c, MPFR_RNDN);
  mpfr_mul(t, t, q, MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  std::string out = mpfr_decimal(acc, digits);
  mpfr_clears(c, acc, t, q, (mpfr_ptr)0);
  return out;
}

std::string CubicNum::str() const {
  std::ostringstream os;
  bool any = false;
  const char* names[3] = {"", "c", "c^2"};
  for (int i = 0; i < 3; ++i) {
    if (q_[i] == 0) continue;
    if (any) os << (q_[i] > 0 ? " + " : " - ");
    else if (q_[i] < 0) os << "-";
    Rat a = abs(q_[i]);
    if (i == 0) os << a.get_str();
    else if (a == 1) os << names[i];
    else os << a.get_str() << "*" << names[i];
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

PureNum::PureNum(int n, const Int& radicand) : n_(n), radicand_(radicand), c_(static_cast<std::size_t>(n)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
}

PureNum::PureNum(int n, const Int& radicand, std::vector<Rat> coeffs) : n_(n), radicand_(radicand), c_(std::move(coeffs)) {
  if (n < 1 || c_.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidArgument, "coefficient count must equal degree");
}

PureNum PureNum::theta_power(int n, const Int& radicand, int t) {
  PureNum out(n, radicand);
  Rat scale = 1;
  while (t >= n) {
    scale *= Rat(radicand);
    t -= n;
  }
  out.c_[static_cast<std::size_t>(t)] = scale;
  return out;
}

PureNum PureNum::constant(int n, const Int& radicand, const Rat& c) {
  PureNum out(n, radicand);
  out.c_[0] = c;
  return out;
}

bool PureNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool PureNum::is_rational() const {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0) return false;
  return true;
}

int PureNum::top() const {
  for (int t = n_ - 1; t >= 0; --t)
    if (c_[static_cast<std::size_t>(t)] != 0) return t;
  return -1;
}

void PureNum::check_compatible(const PureNum& y) const {
  if (n_ != y.n_ || radicand_ != y.radicand_)
    throw Error(ErrorCode::RadicandMismatch, "pure field elements over different fields");
}

PureNum PureNum::operator-() const {
  PureNum out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

PureNum& PureNum::operator+=(const PureNum& y) {
  check_compatible(y);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += y.c_[t];
  return *this;
}

PureNum& PureNum::operator-=(const PureNum& y) {
  check_compatible(y);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= y.c_[t];
  return *this;
}

PureNum& PureNum::operator*=(const PureNum& y) {
  check_compatible(y);
  std::vector<Rat> out(c_.size());
  const Rat m(radicand_);
  const std::size_t n = c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.c_[j] == 0) continue;
      Rat p = c_[i] * y.c_[j];
      std::size_t k = i + j;
      if (k >= n) {
        k -= n;
        p *= m;
      }
      out[k] += p;
    }
  }
  c_ = std::move(out);
  return *this;
}

PureNum& PureNum::operator*=(const Rat& y) {
  for (auto& c : c_) c *= y;
  return *this;
}

PureNum& PureNum::operator/=(const Rat& y) {
  if (y == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  for (auto& c : c_) c /= y;
  return *this;
}

bool operator==(const PureNum& x, const PureNum& y) {
  return x.n_ == y.n_ && x.radicand_ == y.radicand_ && x.c_ == y.c_;
}

PureNum PureNum::pow(unsigned e) const {
  PureNum out = constant(n_, radicand_, 1);
  PureNum base = *this;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::vector<Rat> PureNum::charpoly() const {
  // Faddeev-LeVerrier on the multiplication matrix.
  const std::size_t n = c_.size();
  RatMatrix a(n, n, Rat(0));
  PureNum basis_elt = constant(n_, radicand_, 1);
  const PureNum th = theta_power(n_, radicand_, 1);
  for (std::size_t k = 0; k < n; ++k) {
    PureNum col = *this * basis_elt;
    for (std::size_t i = 0; i < n; ++i) a(i, k) = col.c_[i];
    basis_elt *= th;
  }
  std::vector<Rat> coef(n + 1);
  coef[n] = 1;
  RatMatrix mk(n, n, Rat(0));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coef[n - k + 1];
    mk = next;
    RatMatrix amk = a * mk;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    coef[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return coef;
}

bool PureNum::is_algebraic_integer() const {
  for (const Rat& c : charpoly())
    if (!is_integer(c)) return false;
  return true;
}

std::string PureNum::str() const {
  std::ostringstream os;
  bool any = false;
  for (int t = 0; t < n_; ++t) {
    const Rat& c = c_[static_cast<std::size_t>(t)];
    if (c == 0) continue;
    if (any) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (t == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "th";
      if (t > 1) os << "^" << t;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

SexticNum sextic(const Int& m, std::array<Rat, 6> coeffs) {
  return PureNum(6, m, std::vector<Rat>(coeffs.begin(), coeffs.end()));
}

SexticNum theta(const Int& m) { return PureNum::theta_power(6, m, 1); }

RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

CubicMatrix to_cubic(const RatMatrix& a) {
  CubicMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = CubicNum(a(i, j));
  return out;
}

CubicMatrix congruence(const RatMatrix& b, const CubicMatrix& g) {
  CubicMatrix bc = to_cubic(b);
  return bc.transpose() * g * bc;
}

bool is_integral(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_integer(a(i, j))) return false;
  return true;
}

std::array<CubicNum, 6> gram_weights(const Int& m, bool absolute) {
  const Int r = absolute ? Int(abs(m)) : m;
  const Rat rm(r);
  return {CubicNum(r, 1), CubicNum(r, 0, 1), CubicNum(r, 0, 0, 1),
          CubicNum(r, rm), CubicNum(r, 0, rm), CubicNum(r, 0, 0, rm)};
}

namespace {

CubicMatrix gram_with(const std::vector<SexticNum>& basis, bool absolute) {
  if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis");
  const Int m = basis[0].radicand();
  for (const auto& b : basis)
    if (b.degree() != 6 || b.radicand() != m) throw Error(ErrorCode::RadicandMismatch, "basis elements over different fields");
  const auto w = gram_weights(m, absolute);
  const std::size_t k = basis.size();
  CubicMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      CubicNum acc(0);
      for (int t = 0; t < 6; ++t) {
        Rat p = basis[i][t] * basis[j][t];
        if (p != 0) acc += w[static_cast<std::size_t>(t)] * CubicNum(p);
      }
      acc *= CubicNum(6);
      g(i, j) = acc;
      g(j, i) = acc;
    }
  return g;
}

}  // namespace

CubicMatrix hermitian_gram(const std::vector<SexticNum>& basis) { return gram_with(basis, true); }
CubicMatrix bilinear_gram(const std::vector<SexticNum>& basis) { return gram_with(basis, false); }

bool is_positive_definite(const CubicMatrix& g) {
  if (!g.is_symmetric()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k)
    if (det(g.block(0, 0, k, k)).sign() <= 0) return false;
  return true;
}

RatMatrix coefficient_matrix(const std::vector<PureNum>& basis) {
  if (basis.empty()) return RatMatrix();
  const std::size_t n = static_cast<std::size_t>(basis[0].degree());
  RatMatrix out(n, basis.size(), Rat(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = basis[j][static_cast<int>(i)];
  return out;
}

}  // namespace sextic
