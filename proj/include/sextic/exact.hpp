#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode {
  InvalidArgument = 1,
  RadicandMismatch,
  NotSixthPowerFree,
  Reducible,
  Unclassifiable,
  CaseMismatch,
  AuxUndefined,
  AssumptionViolated,
  NotCanonical,
  InvalidPair,
  Parse,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_name(ErrorCode code);

Rat rat(long num, long den = 1);
Rat rat_from_string(const std::string& s);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);
bool is_integer(const Rat& x);

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

RatInterval operator+(const RatInterval& x, const RatInterval& y);
RatInterval operator*(const RatInterval& x, const RatInterval& y);

// Enclosure of the real r-th root of x of width at most 2^-bits.
RatInterval real_root_enclosure(const Int& x, unsigned r, unsigned bits);

// q0 + q1*c + q2*c^2 with c the real cube root of the radicand. Radicand 0 marks
// a rational constant that adopts the radicand of whatever it is combined with.
class CubicNum {
 public:
  CubicNum() = default;
  CubicNum(const Rat& q) : q_{q, 0, 0} {}
  CubicNum(long q) : q_{Rat(q), 0, 0} {}
  CubicNum(const Int& radicand, const Rat& q0, const Rat& q1 = 0, const Rat& q2 = 0);

  static CubicNum root(const Int& radicand);

  const Int& radicand() const { return radicand_; }
  const Rat& operator[](int i) const { return q_[i]; }
  const std::array<Rat, 3>& coeffs() const { return q_; }

  bool is_zero() const;
  bool is_rational() const { return q_[1] == 0 && q_[2] == 0; }

  CubicNum operator-() const;
  CubicNum& operator+=(const CubicNum& y);
  CubicNum& operator-=(const CubicNum& y);
  CubicNum& operator*=(const CubicNum& y);
  CubicNum& operator/=(const Rat& y);

  friend CubicNum operator+(CubicNum x, const CubicNum& y) { return x += y; }
  friend CubicNum operator-(CubicNum x, const CubicNum& y) { return x -= y; }
  friend CubicNum operator*(CubicNum x, const CubicNum& y) { return x *= y; }
  friend CubicNum operator/(CubicNum x, const Rat& y) { return x /= y; }
  friend bool operator==(const CubicNum& x, const CubicNum& y);
  friend bool operator!=(const CubicNum& x, const CubicNum& y) { return !(x == y); }

  // Rigorous sign; refines the root enclosure until it separates from zero.
  int sign() const;
  RatInterval enclose(unsigned bits) const;
  double to_double() const;
  std::string decimal(int digits) const;
  std::string str() const;

 private:
  void adopt(const CubicNum& y);

  Int radicand_ = 0;
  std::array<Rat, 3> q_{};
};

// sum c_t theta^t with theta^n = radicand; the sextic case is n = 6.
class PureNum {
 public:
  PureNum() = default;
  PureNum(int n, const Int& radicand);
  PureNum(int n, const Int& radicand, std::vector<Rat> coeffs);

  static PureNum theta_power(int n, const Int& radicand, int t);
  static PureNum constant(int n, const Int& radicand, const Rat& c);

  int degree() const { return n_; }
  const Int& radicand() const { return radicand_; }
  const Rat& operator[](int t) const { return c_[t]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Highest t with nonzero coefficient, -1 for zero.
  int top() const;

  PureNum operator-() const;
  PureNum& operator+=(const PureNum& y);
  PureNum& operator-=(const PureNum& y);
  PureNum& operator*=(const PureNum& y);
  PureNum& operator*=(const Rat& y);
  PureNum& operator/=(const Rat& y);

  friend PureNum operator+(PureNum x, const PureNum& y) { return x += y; }
  friend PureNum operator-(PureNum x, const PureNum& y) { return x -= y; }
  friend PureNum operator*(PureNum x, const PureNum& y) { return x *= y; }
  friend PureNum operator*(PureNum x, const Rat& y) { return x *= y; }
  friend PureNum operator/(PureNum x, const Rat& y) { return x /= y; }
  friend bool operator==(const PureNum& x, const PureNum& y);

  PureNum pow(unsigned e) const;
  Rat trace() const { return c_.empty() ? Rat(0) : Rat(c_[0] * n_); }
  // Characteristic polynomial of multiplication by this element, lowest degree first, monic.
  std::vector<Rat> charpoly() const;
  bool is_algebraic_integer() const;
  std::string str() const;

 private:
  void check_compatible(const PureNum& y) const;

  int n_ = 0;
  Int radicand_ = 0;
  std::vector<Rat> c_;
};

using SexticNum = PureNum;

SexticNum sextic(const Int& m, std::array<Rat, 6> coeffs);
SexticNum theta(const Int& m);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using CubicMatrix = Matrix<CubicNum>;

// Cofactor expansion over column subsets; division free, fine for n <= 10.
template <class T>
T det(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::InvalidArgument, "det of non-square matrix");
  if (n == 0) return T(1);
  if (n > 16) throw Error(ErrorCode::InvalidArgument, "det: matrix too large");
  // minors[mask] = det of rows (n - popcount(mask) .. n-1) against columns in mask
  std::vector<T> minors(std::size_t(1) << n, T(0));
  minors[0] = T(1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t row = n - k;
    T acc(0);
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t(1) << j))) continue;
      const T& x = a(row, j);
      if (!(x == T(0))) {
        T term = x * minors[mask & ~(std::size_t(1) << j)];
        if (parity) acc -= term; else acc += term;
      }
      parity ^= 1;
    }
    minors[mask] = acc;
  }
  return minors.back();
}

RatMatrix inverse(const RatMatrix& a);
CubicMatrix to_cubic(const RatMatrix& a);
// B^T G B
CubicMatrix congruence(const RatMatrix& b, const CubicMatrix& g);
bool is_integral(const RatMatrix& a);

// 6 * sum_t x_t y_t |theta|^{2t}: the Hermitian Gram of the complex embeddings.
CubicMatrix hermitian_gram(const std::vector<SexticNum>& basis);
// Same bilinear rule with theta^2 read as the real cube root of m (signed).
CubicMatrix bilinear_gram(const std::vector<SexticNum>& basis);
// diag(|theta|^{2t}) as elements of Q(|m|^{1/3}).
std::array<CubicNum, 6> gram_weights(const Int& m, bool absolute);

// Positive definiteness via exact leading principal minors.
bool is_positive_definite(const CubicMatrix& g);

// Coefficient matrix whose columns are the basis elements over {1, theta, ..., theta^{n-1}}.
RatMatrix coefficient_matrix(const std::vector<PureNum>& basis);

}  // namespace sextic
