#include "sextic/pure_field.hpp"

#include <doctest.h>

using namespace sextic;

namespace {

CarefreeTuple tup(int sign, long a1, long a2, long a3, long a4, long a5) {
  CarefreeTuple t;
  t.sign = sign;
  t.a = {Int(a1), Int(a2), Int(a3), Int(a4), Int(a5)};
  return t;
}

}  // namespace

TEST_CASE("factorization") {
  const auto f = factorize(Int(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Int(2), 3u));
  CHECK(f[1] == std::make_pair(Int(3), 2u));
  CHECK(f[2] == std::make_pair(Int(5), 1u));
  const Int big = Int("1000000007") * Int("998244353");
  const auto g = factorize(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == Int("998244353"));
  CHECK(is_probable_prime(Int("1000000007")));
  CHECK_FALSE(is_probable_prime(big));
  CHECK(valuation(Int(96), Int(2)) == 5);
  CHECK(prime_divisors(Int(90)) == std::vector<Int>{2, 3, 5});
}

TEST_CASE("carefree decomposition") {
  CHECK(decompose(Int(112)) == tup(1, 7, 1, 1, 2, 1));
  CHECK(decompose(Int(-2 * 9 * 125)) == tup(-1, 2, 3, 5, 1, 1));
  CHECK(reconstruct(tup(-1, 2, 3, 5, 1, 1)) == -2250);
  CHECK_THROWS_AS(decompose(Int(64)), Error);
  try {
    decompose(Int(3 * 64));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSixthPowerFree);
  }
  CHECK(is_valid_tuple(tup(1, 2, 3, 5, 7, 11)));
  CHECK_FALSE(is_valid_tuple(tup(1, 2, 2, 1, 1, 1)));
  CHECK_FALSE(is_valid_tuple(tup(1, 4, 1, 1, 1, 1)));
}

TEST_CASE("irreducibility") {
  CHECK_THROWS_AS(SexticField::make(Int(4)), Error);
  CHECK_THROWS_AS(SexticField::make(Int(8)), Error);
  CHECK_THROWS_AS(SexticField::make(Int(-27)), Error);
  CHECK_THROWS_AS(SexticField::make(Int(0)), Error);
  CHECK(is_irreducible_sextic(Int(-4)));
  CHECK(is_irreducible_sextic(Int(2)));
  CHECK_FALSE(is_irreducible_sextic(Int(9)));
  try {
    SexticField::make(Int(4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Reducible);
  }
}

TEST_CASE("constants C_i") {
  const auto c = big_c(decompose(Int(32)));
  CHECK(c == std::array<Int, 6>{1, 1, 2, 4, 8, 16});
  const auto d = big_c(tup(1, 2, 3, 5, 7, 11));
  // C_3 = a2 a3 a4^2 a5^2
  CHECK(d[3] == Int(3 * 5 * 49 * 121));
  CHECK(d[1] == 1);
  CHECK(d[5] == Int(3) * 25 * 343 * Int(11 * 11 * 11 * 11));
}

TEST_CASE("duality and canonical orientation") {
  const CarefreeTuple t = tup(1, 2, 3, 5, 7, 11);
  const CarefreeTuple d = dual(t);
  CHECK(d == tup(1, 11, 7, 5, 3, 2));
  CHECK(dual(d) == t);
  CHECK(is_canonical(t) != is_canonical(d));
  CHECK(is_canonical(canonical(d)));
  CHECK(canonical(d) == canonical(t));
  CHECK_FALSE(is_canonical(tup(1, 2, 1, 1, 1, 1)));
}

TEST_CASE("general decomposition and discriminant valuations") {
  const PureTuple p = decompose_general(4, Int(-24));
  CHECK(p.sign == -1);
  CHECK(p.a[1] == 3);
  CHECK(p.a[3] == 2);
  CHECK(big_c_general(p)[3] == 4);
  CHECK(assumption_holds(6, Int(3)));
  CHECK_FALSE(assumption_holds(6, Int(4)));
  CHECK(assumption_holds(6, Int(9)));
  CHECK_FALSE(assumption_holds(6, Int(27)));
  CHECK(assumption_holds(6, Int(8)));
  CHECK_THROWS_AS(disc_valuations(6, Int(4)), Error);
  const DiscValuations v = disc_valuations(6, Int(3));
  CHECK(v.total(Int(3)) == 11);
  CHECK(v.total(Int(2)) == 6);
  CHECK(v.abs_value() == Int(64) * Int(177147));
}
