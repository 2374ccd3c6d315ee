#pragma once

#include "sextic/classify.hpp"
#include "sextic/expr.hpp"
#include "sextic/pure_field.hpp"

#include <array>
#include <vector>

namespace sextic {

struct IntegralBasis {
  SexticType type;
  std::vector<SexticNum> elements;  // 1, th, th^2/C2, beta, gamma, delta
  ExprEnv env;
};

// C1..C5, m3 = m/27, C33 = C3/3, C43 = C4/9, C53 = C5/9, C52 = C5/8; non-integral values are left undefined.
ExprEnv field_env(const SexticField& f);

// Throws CaseMismatch when t is not the Type of f, AuxUndefined on a non-integral constant.
IntegralBasis build_basis(const SexticField& f, const SexticType& t);
IntegralBasis build_basis(const SexticField& f);

// {th^t / C_t}
std::vector<SexticNum> power_basis(const SexticField& f);

// Tabulated transition matrix with the field's constants substituted.
RatMatrix table_transition(const SexticType& t, const SexticField& f);
// Transition from {th^t/C_t} to the basis, read off the coefficients.
RatMatrix derived_transition(const IntegralBasis& b, const SexticField& f);
// 6 times the tabulated Gram matrix, with th^2 read as the real cube root of m.
CubicMatrix table_gram(const SexticType& t, const SexticField& f);
// Gram of {th^t/C_t} under the bilinear rule.
CubicMatrix power_gram(const SexticField& f);

// The per-Type test corpus: the `per_type` smallest |m| (m = 2, -2, 3, -3, ...) of each Type
// among sixth-power-free, non-square, non-cube integers.
std::array<std::vector<Int>, 20> type_corpus(int per_type);

}  // namespace sextic
