#include "sextic/exact.hpp"
#include "sextic/expr.hpp"

#include <doctest.h>

using namespace sextic;

TEST_CASE("rational helpers") {
  CHECK(rat(2, 4) == Rat(1, 2));
  CHECK(rat_from_string("-3/6") == Rat(-1, 2));
  CHECK_THROWS_AS(rat_from_string("x"), Error);
  CHECK(is_integer(rat(6, 3)));
  CHECK_FALSE(is_integer(rat(1, 3)));
  CHECK(to_string(rat(5, 10)) == "1/2");
}

TEST_CASE("real root enclosures are tight and correct") {
  const RatInterval r = real_root_enclosure(Int(2), 3, 64);
  CHECK(r.lo * r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi * r.hi >= 2);
  CHECK(r.hi - r.lo <= Rat(1, Int(1) << 64));
  const RatInterval s = real_root_enclosure(Int(-5), 3, 32);
  CHECK(s.hi < 0);
}

TEST_CASE("cubic numbers") {
  const CubicNum c = CubicNum::root(Int(5));
  CHECK(c * c * c == CubicNum(5));
  CHECK((c - CubicNum(2)).sign() < 0);
  CHECK((c - CubicNum(Rat(17, 10))).sign() > 0);
  CHECK(CubicNum::root(Int(2)).decimal(10) == "1.25992105");
  CHECK(CubicNum(Int(5), 0).is_zero());
  CHECK_THROWS_AS(c + CubicNum::root(Int(7)), Error);
  const CubicNum neg = CubicNum::root(Int(-2));
  CHECK(neg.sign() < 0);
  CHECK(neg * neg * neg == CubicNum(-2));
}

TEST_CASE("pure field arithmetic") {
  const Int m(3);
  const SexticNum th = theta(m);
  CHECK(th.pow(6) == PureNum::constant(6, m, 3));
  CHECK(th.pow(7) == th * Rat(3));
  const auto cp = th.charpoly();
  REQUIRE(cp.size() == 7);
  CHECK(cp[0] == -3);
  CHECK(cp[6] == 1);
  for (int k = 1; k < 6; ++k) CHECK(cp[static_cast<std::size_t>(k)] == 0);
  CHECK(th.is_algebraic_integer());
  CHECK_FALSE((th / Rat(2)).is_algebraic_integer());
  // (1 + sqrt m)/2 is integral exactly when m = 1 mod 4
  CHECK((PureNum::constant(6, Int(5), 1) + PureNum::theta_power(6, Int(5), 3)).is_algebraic_integer());
  CHECK(((PureNum::constant(6, Int(5), 1) + PureNum::theta_power(6, Int(5), 3)) / Rat(2)).is_algebraic_integer());
  CHECK_FALSE(((PureNum::constant(6, Int(3), 1) + PureNum::theta_power(6, Int(3), 3)) / Rat(2)).is_algebraic_integer());
  CHECK(th.trace() == 0);
  CHECK(PureNum::constant(6, m, 2).trace() == 12);
}

TEST_CASE("matrices") {
  RatMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  CHECK(det(a) == -2);
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK(a.transpose()(0, 1) == 3);
  RatMatrix s(2, 2);
  s(0, 0) = 0; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = 0;
  CHECK_THROWS_AS(inverse(RatMatrix(2, 2, Rat(1))), Error);
  CHECK(det(s) == -1);
  CHECK(is_integral(s));
  CHECK_FALSE(is_integral(inverse(a)));
}

TEST_CASE("Gram forms") {
  const Int m(-7);
  std::vector<SexticNum> basis;
  for (int t = 0; t < 6; ++t) basis.push_back(PureNum::theta_power(6, m, t));
  const CubicMatrix h = hermitian_gram(basis);
  CHECK(is_positive_definite(h));
  CHECK(det(h) == CubicNum(Rat(Int(46656) * Int(16807))));  // 6^6 |m|^5
  const CubicMatrix b = bilinear_gram(basis);
  CHECK(b(3, 3) == CubicNum(Rat(6 * -7)));
  CHECK(h(3, 3) == CubicNum(Rat(6 * 7)));
}

TEST_CASE("expression evaluation") {
  const Int m(112);
  ExprEnv env{{"C4", Rat(7)}, {"m3", std::nullopt}};
  const SexticNum x = eval_expr("(th^4+C4*th)/(2*C4)", m, env);
  CHECK(x[4] == Rat(1, 14));
  CHECK(x[1] == Rat(1, 2));
  CHECK_THROWS_AS(eval_expr("m3*th", m, env), Error);
  CHECK_THROWS_AS(eval_expr("(th", m, env), Error);
  CHECK(eval_expr("th^6", m, env) == PureNum::constant(6, m, 112));
  const CubicNum c = eval_cubic_expr("th^2*m+1", m, env);
  CHECK(c[0] == 1);
  CHECK(c[1] == 112);
}
