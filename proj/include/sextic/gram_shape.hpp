#pragma once

#include "sextic/basis.hpp"

#include <array>
#include <vector>

namespace sextic {

// Hermitian Gram of the Type basis; entries lie in Q(|m|^{1/3}).
CubicMatrix gram6(const SexticField& f);

struct ShapeGram {
  CubicMatrix p;                 // Gram of {6*alpha - tr(alpha)} over the basis elements 2..6
  RatMatrix c_prime;             // lower-right 5x5 block of the transition matrix
  std::array<CubicNum, 5> d;     // 216 |theta|^{2t} / C_t^2, t = 1..5
  bool certificate_holds = false;
};

ShapeGram shape_gram(const SexticField& f);

// The five certificate weights divided by 216 * prod a_j, as monomials in a_1..a_5.
std::array<RadicalMonomial, 5> normalized_diagonal(const SexticField& f);
// Diagonal of a diagonal shape Gram, normalized the same way; throws InvalidArgument if not diagonal.
std::array<RadicalMonomial, 5> normalized_gram_diagonal(const ShapeGram& g, const SexticField& f);

// lambda_1 .. lambda_4; throws NotCanonical.
std::array<RadicalMonomial, 4> shape_params(const SexticField& f);
std::array<RadicalMonomial, 4> shape_params(const CarefreeTuple& t);
// (lambda_1, lambda_2, lambda_3, lambda_2^{-1}/a_3^2, lambda_1^{-1})
std::array<RadicalMonomial, 5> expected_shape_diagonal();

// q * |m|^{e/3} with q rational, written as a monomial in a_1..a_5 (coefficient keeps any residual factor).
RadicalMonomial monomial_from_cubic(const CubicNum& x, const CarefreeTuple& t);

std::vector<Int> tuple_values(const CarefreeTuple& t);

}  // namespace sextic
