#include "sextic/basis.hpp"
#include "sextic/gram_shape.hpp"

#include <doctest.h>

#include <set>

using namespace sextic;

namespace {

struct DiscRow {
  const char* type;
  long m;
  const char* disc;
};

const DiscRow kDisc[] = {
#include "oracle/sextic_discriminants.inc"
};

Rat cubic_rat(const CubicNum& x) {
  REQUIRE(x.is_rational());
  return x[0];
}

using Cells = std::set<std::pair<std::size_t, std::size_t>>;

Cells diff_cells(const CubicMatrix& a, const CubicMatrix& b) {
  Cells out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) out.insert({i, j});
  return out;
}

}  // namespace

TEST_CASE("discriminants match the PARI oracle") {
  CHECK(std::size(kDisc) == 500);
  for (const DiscRow& r : kDisc) {
    CAPTURE(r.m);
    const SexticField f = SexticField::make(Int(r.m));
    CHECK(classify(f.m).name() == r.type);
    const Int d(r.disc);
    CHECK(cubic_rat(det(gram6(f))) == abs(d));
    CHECK((d > 0) == (r.m > 0));
  }
}

TEST_CASE("basis elements are integral and generate the maximal order") {
  const auto corpus = type_corpus(25);
  for (int k = 0; k < 20; ++k) {
    CHECK(corpus[static_cast<std::size_t>(k)].size() == 25);
    for (const Int& m : corpus[static_cast<std::size_t>(k)]) {
      CAPTURE(m.get_str());
      const SexticField f = SexticField::make(m);
      const IntegralBasis b = build_basis(f);
      CHECK(b.type.index() == k);
      REQUIRE(b.elements.size() == 6);
      for (const auto& e : b.elements) CHECK(e.is_algebraic_integer());
      const RatMatrix p = derived_transition(b, f);
      CHECK(is_integral(inverse(p)));
      CHECK(gram6(f) == congruence(p, hermitian_gram(power_basis(f))));
    }
  }
}

TEST_CASE("tabulated Gram and transition entries") {
  // Entries whose tabulated form disagrees with the basis: (type, cells of the Gram, cells of the transition).
  const std::map<std::string, Cells> gram_typos = {
      {"A1,B3", {{1, 3}, {3, 1}, {3, 3}, {3, 5}, {5, 3}, {5, 5}}},
      {"A2,B1", {{4, 4}}},
      {"A2,B4", {{3, 3}}},
      {"A4,B1", {{4, 4}}},
  };
  const auto corpus = type_corpus(25);
  for (int k = 0; k < 20; ++k) {
    const SexticType t = type_from_index(k);
    for (const Int& m : corpus[static_cast<std::size_t>(k)]) {
      CAPTURE(m.get_str());
      const SexticField f = SexticField::make(m);
      const IntegralBasis b = build_basis(f, t);
      const Cells cells = diff_cells(table_gram(t, f), bilinear_gram(b.elements));
      const auto it = gram_typos.find(t.name());
      if (it == gram_typos.end()) {
        CHECK(cells.empty());
      } else {
        for (const auto& c : cells) CHECK(it->second.count(c) == 1);
      }
      const RatMatrix tp = table_transition(t, f);
      const RatMatrix dp = derived_transition(b, f);
      if (t.name() == "A1,B3") {
        CHECK(tp(3, 5) != dp(3, 5));
        RatMatrix fixed = tp;
        fixed(3, 5) = dp(3, 5);
        fixed(1, 3) = dp(1, 3);
        CHECK(fixed == dp);
        // the two readings of beta differ by an integral multiple of theta
        CHECK(is_integer(dp(1, 3) - tp(1, 3)));
      } else {
        CHECK(tp == dp);
      }
    }
  }
}

TEST_CASE("the A2,B1 entry differs only when C4 is not 1") {
  const SexticField ok = SexticField::make(Int(5));
  CHECK(ok.c[4] == 1);
  CHECK(table_gram(SexticType{2, 1}, ok) == bilinear_gram(build_basis(ok).elements));
  const SexticField bad = SexticField::make(Int(20));
  CHECK(bad.c[4] == 2);
  const CubicMatrix tg = table_gram(SexticType{2, 1}, bad);
  const CubicMatrix bg = bilinear_gram(build_basis(bad).elements);
  CHECK(tg(4, 4) == bg(4, 4) * CubicNum(Rat(4)));
}

TEST_CASE("basis errors") {
  const SexticField f = SexticField::make(Int(112));
  CHECK_THROWS_AS(build_basis(f, SexticType{1, 1}), Error);
  try {
    build_basis(f, SexticType{1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CaseMismatch);
  }
  const ExprEnv env = field_env(SexticField::make(Int(2)));
  CHECK_FALSE(env.at("m3").has_value());
  CHECK(field_env(SexticField::make(Int(-54))).at("m3") == Rat(-2));
}
