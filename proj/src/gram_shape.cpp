#include "sextic/gram_shape.hpp"

namespace sextic {

CubicMatrix gram6(const SexticField& f) { return hermitian_gram(build_basis(f).elements); }

ShapeGram shape_gram(const SexticField& f) {
  const IntegralBasis b = build_basis(f);
  std::vector<SexticNum> perp;
  for (std::size_t k = 1; k < 6; ++k) {
    SexticNum a = b.elements[k] * Rat(6);
    a -= PureNum::constant(6, f.m, b.elements[k].trace());
    perp.push_back(a);
  }
  ShapeGram g;
  g.p = hermitian_gram(perp);
  g.c_prime = derived_transition(b, f).block(1, 1, 5, 5);
  const auto w = gram_weights(f.m, true);
  CubicMatrix dm(5, 5, CubicNum(0));
  for (std::size_t t = 1; t < 6; ++t) {
    g.d[t - 1] = w[t] * CubicNum(Rat(216) / Rat(Int(f.c[t] * f.c[t])));
    dm(t - 1, t - 1) = g.d[t - 1];
  }
  g.certificate_holds = congruence(g.c_prime, dm) == g.p;
  return g;
}

std::vector<Int> tuple_values(const CarefreeTuple& t) { return {t.a.begin(), t.a.end()}; }

RadicalMonomial monomial_from_cubic(const CubicNum& x, const CarefreeTuple& t) {
  int e = -1;
  for (int i = 0; i < 3; ++i)
    if (x[i] != 0) {
      if (e >= 0) throw Error(ErrorCode::InvalidArgument, "not a monomial: " + x.str());
      e = i;
    }
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "zero is not a monomial");
  RadicalMonomial out;
  out.exps.assign(5, Rat(0));
  Rat q = x[e];
  // |m|^{e/3} = prod a_j^{j e / 3}
  for (int j = 1; j <= 5; ++j) out.exps[j - 1] = Rat(j * e, 3);
  for (int j = 1; j <= 5; ++j) {
    if (t.a[j - 1] == 1) continue;
    const auto primes = prime_divisors(t.a[j - 1]);
    auto val = [&](const Int& p) {
      long v = 0;
      Int num = q.get_num(), den = q.get_den();
      if (num != 0) v += valuation(num, p);
      v -= valuation(den, p);
      return v;
    };
    const long v0 = val(primes[0]);
    for (const Int& p : primes)
      if (val(p) != v0) throw Error(ErrorCode::InvalidArgument, "coefficient is not a monomial in a_j");
    out.exps[j - 1] += v0;
    Rat scale = 1;
    Int aj = t.a[j - 1];
    for (long k = 0; k < (v0 < 0 ? -v0 : v0); ++k) scale *= Rat(aj);
    q = v0 >= 0 ? Rat(q / scale) : Rat(q * scale);
  }
  for (auto& r : out.exps) r.canonicalize();
  out.coeff = q;
  return out;
}

namespace {

// Exponents of a_j equal to 1 are not observable; they take the symbolic value j*t/3 - 2*floor(j*t/6) - 1.
RadicalMonomial normalize(const CubicNum& x, const CarefreeTuple& t, int index) {
  RadicalMonomial mono = monomial_from_cubic(x / Rat(216), t);
  for (int j = 1; j <= 5; ++j) {
    Rat& e = mono.exps[static_cast<std::size_t>(j - 1)];
    if (t.a[static_cast<std::size_t>(j - 1)] == 1) e = Rat(j * index, 3) - 2 * ((j * index) / 6);
    e -= 1;
    e.canonicalize();
  }
  return mono;
}

}  // namespace

std::array<RadicalMonomial, 5> normalized_diagonal(const SexticField& f) {
  const auto w = gram_weights(f.m, true);
  std::array<RadicalMonomial, 5> out;
  for (std::size_t t = 1; t < 6; ++t)
    out[t - 1] = normalize(w[t] * CubicNum(Rat(216) / Rat(Int(f.c[t] * f.c[t]))), f.tuple, static_cast<int>(t));
  return out;
}

std::array<RadicalMonomial, 5> normalized_gram_diagonal(const ShapeGram& g, const SexticField& f) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j && !g.p(i, j).is_zero()) throw Error(ErrorCode::InvalidArgument, "shape Gram is not diagonal");
  std::array<RadicalMonomial, 5> out;
  for (std::size_t t = 0; t < 5; ++t) out[t] = normalize(g.p(t, t), f.tuple, static_cast<int>(t + 1));
  return out;
}

namespace {

RadicalMonomial mono(std::array<long, 5> num, long den) {
  RadicalMonomial m;
  for (long x : num) {
    Rat r(x, den);
    r.canonicalize();
    m.exps.push_back(r);
  }
  return m;
}

std::array<RadicalMonomial, 4> lambdas() {
  RadicalMonomial l2 = mono({-1, 1, -3, -1, 1}, 3);
  RadicalMonomial l4 = l2.inverse();
  l4.exps[2] -= 2;
  return {mono({-2, -1, 0, 1, 2}, 3), l2, mono({0, -1, 0, -1, 0}, 1), l4};
}

}  // namespace

std::array<RadicalMonomial, 4> shape_params(const CarefreeTuple& t) {
  if (!is_canonical(t)) throw Error(ErrorCode::NotCanonical, "tuple is not in canonical orientation; use its dual");
  return lambdas();
}

std::array<RadicalMonomial, 4> shape_params(const SexticField& f) { return shape_params(f.tuple); }

std::array<RadicalMonomial, 5> expected_shape_diagonal() {
  const auto l = lambdas();
  return {l[0], l[1], l[2], l[3], l[0].inverse()};
}

}  // namespace sextic
