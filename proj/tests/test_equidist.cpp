#include "sextic/equidist.hpp"

#include <doctest.h>

#include <cmath>

using namespace sextic;

namespace {

Box3 make_box(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f) {
  Box3 box;
  box.lo = {a, c, e};
  box.hi = {b, d, f};
  return box;
}

EnumSpec c_spec(long n) {
  EnumSpec s;
  s.family = Family::C;
  s.box = make_box(Rat(1), Rat(8), Rat(1, 8), Rat(8), Rat(1), Rat(6));
  s.n = n;
  return s;
}

EnumSpec t_spec(long n) {
  EnumSpec s;
  s.family = Family::T;
  s.box = make_box(Rat(1), Rat(8), Rat(1), Rat(6), Rat(1), Rat(3));
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("C") == Family::C);
  CHECK(parse_family("t") == Family::T);
  CHECK(family_name(Family::T) == "T");
  CHECK_THROWS_AS(parse_family("x"), Error);
}

TEST_CASE("enumeration matches the naive oracle") {
  for (long n : {1000000L, 3000000L}) {
    for (EnumSpec s : {c_spec(n), t_spec(n)}) {
      CAPTURE(n);
      CAPTURE(family_name(s.family));
      const EnumResult r = enumerate(s);
      CHECK(r.tuples == naive_oracle(s));
      CHECK(r.carefree_count == static_cast<long>(r.tuples.size()));
      for (const auto& t : r.tuples) CHECK(counts_once(s, t));
    }
  }
  EnumSpec neg = c_spec(1000000);
  neg.sign = -1;
  neg.type = SexticType{2, 1};
  CHECK(enumerate(neg).tuples == naive_oracle(neg));
}

TEST_CASE("counts grow with the bound") {
  Int prev = 0, prev_raw = 0;
  for (long n : {100000L, 1000000L, 10000000L, 100000000L}) {
    const EnumResult r = enumerate(c_spec(n));
    CHECK(r.carefree_count >= prev);
    CHECK(r.raw_count >= prev_raw);
    CHECK(r.raw_count >= r.carefree_count);
    prev = r.carefree_count;
    prev_raw = r.raw_count;
  }
}

TEST_CASE("raw counts are additive over split boxes") {
  EnumSpec whole = t_spec(100000000);
  whole.carefree = false;
  EnumSpec lo = whole, hi = whole;
  lo.box.hi[2] = Rat(1);
  hi.box.lo[2] = Rat(2);
  hi.box.hi[2] = Rat(2);
  whole.box.hi[2] = Rat(2);
  CHECK(enumerate(whole).raw_count == enumerate(lo).raw_count + enumerate(hi).raw_count);
}

TEST_CASE("empty box and single tuples") {
  EnumSpec s = c_spec(1000000000);
  s.box = make_box(Rat(2), Rat(1), Rat(1), Rat(2), Rat(1), Rat(2));
  const EnumResult r = enumerate(s);
  CHECK(r.raw_count == 0);
  CHECK(r.tuples.empty());
  const EnumSpec t = t_spec(1000000000);
  CHECK_FALSE(in_region(t, {1, 1, 1, 1, 100}));
  CHECK_FALSE(is_member(t, {2, 1, 1, 1, 2}));  // a1 = a5 = 2 is not carefree
}

TEST_CASE("dedup keeps one orientation") {
  EnumSpec s = t_spec(1000000000);
  s.box = make_box(Rat(1, 8), Rat(8), Rat(1), Rat(6), Rat(1), Rat(3));
  const EnumResult r = enumerate(s);
  for (const auto& t : r.tuples) {
    const Tuple5 d{t[4], t[3], t[2], t[1], t[0]};
    if (d != t && is_member(s, d)) CHECK_FALSE(std::binary_search(r.tuples.begin(), r.tuples.end(), d));
  }
}

TEST_CASE("slope fit") {
  std::vector<long double> x, y;
  for (int k = 0; k < 6; ++k) {
    x.push_back(k);
    y.push_back(0.2L * k + 3 + (k % 2 ? 1e-3L : -1e-3L));
  }
  const SlopeFit f = fit_slope(x, y);
  CHECK(std::fabs(static_cast<double>(f.slope) - 0.2) < 1e-3);
  CHECK(std::fabs(static_cast<double>(f.intercept) - 3) < 1e-2);
  CHECK(f.points == 6);
  CHECK(f.std_error < 1e-2);
}

TEST_CASE("harness rows are reproducible") {
  DensityTables tables;
  const EnumSpec s = c_spec(0);
  const std::vector<Int> ladder{Int(100000000), Int(1000000000)};
  const HarnessReport a = compare(s, ladder, tables, 100000);
  const HarnessReport b = compare(s, ladder, tables, 100000);
  REQUIRE(a.rows.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(a.rows[k].carefree_count == b.rows[k].carefree_count);
    CHECK(a.rows[k].exact_local == b.rows[k].exact_local);
    CHECK(a.rows[k].measure_normalized > 0);
    CHECK(a.rows[k].raw_predicted > 0);
  }
  CHECK(a.fit.points == 2);
}
