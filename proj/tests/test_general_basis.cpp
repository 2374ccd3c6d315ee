#include "sextic/basis.hpp"
#include "sextic/general_basis.hpp"
#include "sextic/gram_shape.hpp"

#include <doctest.h>

using namespace sextic;

namespace {

struct PureRow {
  int n;
  long m;
  const char* disc;
};

const PureRow kPure[] = {
#include "oracle/pure_discriminants.inc"
};

Int power(const Int& x, int e) {
  Int out = 1;
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

}  // namespace

TEST_CASE("general bases match the PARI discriminants") {
  int checked = 0;
  for (const PureRow& r : kPure) {
    const Int m(r.m);
    if (!assumption_holds(r.n, m)) continue;
    CAPTURE(r.n);
    CAPTURE(r.m);
    const auto basis = general_integral_basis(r.n, m);
    REQUIRE(basis.size() == static_cast<std::size_t>(r.n));
    for (const auto& e : basis) CHECK(e.is_algebraic_integer());
    const Rat c = det(coefficient_matrix(basis));
    const Rat d = Rat(power(Int(r.n), r.n) * power(abs(m), r.n - 1)) * c * c;
    const Int oracle(r.disc);
    CHECK(d == Rat(abs(oracle)));
    CHECK(disc_valuations(r.n, m).abs_value() == abs(oracle));
    ++checked;
  }
  CHECK(checked == 592);
}

TEST_CASE("degree six agrees with the Type bases") {
  for (long m = -300; m <= 300; ++m) {
    if (m == 0 || !is_sixth_power_free(m) || is_square_or_cube(m) || !assumption_holds(6, Int(m))) continue;
    CAPTURE(m);
    const SexticField f = SexticField::make(Int(m));
    CHECK(same_lattice(general_integral_basis(6, Int(m)), build_basis(f).elements));
  }
}

TEST_CASE("lattice comparison detects a sublattice") {
  const Int m(7);
  std::vector<PureNum> a, b;
  for (int t = 0; t < 3; ++t) a.push_back(PureNum::theta_power(3, m, t));
  b = a;
  b[1] = b[1] * Rat(2);
  CHECK(same_lattice(a, a));
  CHECK_FALSE(same_lattice(a, b));
}

TEST_CASE("assumption violations") {
  CHECK_THROWS_AS(general_integral_basis(6, Int(4)), Error);
  try {
    wild_data(4, Int(12));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AssumptionViolated);
  }
  const WildData w = wild_data(6, Int(10));
  // only primes p | n with v_p(m^(p-1) - 1) > 1 enter
  REQUIRE(w.primes.size() == 1);
  CHECK(w.primes[0].p == 3);
  CHECK(w.primes[0].r == 1);
  CHECK(w.primes[0].d == 1);
}

TEST_CASE("general shape parameters reduce to the sextic ones") {
  for (long m : {2L, -12L, 112L, 3000L, -4116L}) {
    CAPTURE(m);
    const CarefreeTuple t = canonical(decompose(Int(m)));
    const Int mc = reconstruct(t);
    const auto g = general_shape_params(decompose_general(6, mc));
    const auto s = shape_params(t);
    REQUIRE(g.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(g[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k)]);
  }
}
