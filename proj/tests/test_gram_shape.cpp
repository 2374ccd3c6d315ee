#include "sextic/gram_shape.hpp"

#include <doctest.h>

using namespace sextic;

TEST_CASE("Gram matrices are positive definite with determinant |disc|") {
  for (long m : {2L, -3L, 112L, -270L, 1080L}) {
    CAPTURE(m);
    const SexticField f = SexticField::make(Int(m));
    const CubicMatrix g = gram6(f);
    CHECK(g.is_symmetric());
    CHECK(is_positive_definite(g));
    CHECK(det(g).sign() > 0);
  }
}

TEST_CASE("shape certificate holds across Types") {
  const auto corpus = type_corpus(5);
  for (const auto& list : corpus)
    for (const Int& m : list) {
      CAPTURE(m.get_str());
      const ShapeGram g = shape_gram(SexticField::make(m));
      CHECK(g.certificate_holds);
      CHECK(g.p.rows() == 5);
    }
}

TEST_CASE("normalized diagonal of the simplest Type") {
  for (long m : {32L, 2L * 9 * 125 * 49 * 11 * 11 * 11 * 11 * 11, 6L}) {
    const CarefreeTuple t = canonical(decompose(Int(m)));
    const Int mc = reconstruct(t);
    if (!(classify(mc) == SexticType{1, 1})) continue;
    CAPTURE(mc.get_str());
    const SexticField f = SexticField::make(mc);
    CHECK(normalized_diagonal(f) == expected_shape_diagonal());
  }
}

TEST_CASE("shape parameters of m = 32") {
  const SexticField f = SexticField::make(Int(32));
  const auto l = shape_params(f);
  const std::vector<Int> a = tuple_values(f.tuple);
  CHECK(l[0].decimal(a, 10) == "1.587401052");
  CHECK(l[1].decimal(a, 10) == "1.25992105");
  CHECK(l[2].decimal(a, 10) == "1");
  CHECK(l[3].decimal(a, 10) == "0.793700526");
  CHECK(l[0].to_double(a) >= l[1].to_double(a));
}

TEST_CASE("shape parameters require the canonical orientation") {
  CarefreeTuple t;
  t.a = {Int(2), Int(1), Int(1), Int(1), Int(1)};
  CHECK_FALSE(is_canonical(t));
  try {
    shape_params(t);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCanonical);
  }
  CHECK_NOTHROW(shape_params(dual(t)));
}

TEST_CASE("monomials") {
  RadicalMonomial x{Rat(3), {Rat(1, 3), Rat(0), Rat(0), Rat(0), Rat(-1)}};
  const RadicalMonomial y = x.inverse();
  CHECK(y.coeff == Rat(1, 3));
  CHECK(y.exps[4] == 1);
  CHECK(x.str() == "3*a1^(1/3)*a5^(-1)");
}
