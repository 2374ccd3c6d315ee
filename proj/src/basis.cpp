#include "sextic/basis.hpp"

#include "type_tables.hpp"

#include <mutex>

namespace sextic {

namespace {

const detail::TypeTable& table_for(const SexticType& t) {
  for (const auto& tt : detail::kTypeTables)
    if (tt.i == t.i && tt.j == t.j) return tt;
  throw Error(ErrorCode::InvalidArgument, "no table for type " + t.name());
}

std::optional<Rat> exact_quotient(const Int& x, long d) {
  if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(d))) return std::nullopt;
  return Rat(x, d);
}

}  // namespace

ExprEnv field_env(const SexticField& f) {
  ExprEnv env;
  for (int i = 1; i <= 5; ++i) env["C" + std::to_string(i)] = Rat(f.c[static_cast<std::size_t>(i)]);
  env["m3"] = exact_quotient(f.m, 27);
  env["C33"] = exact_quotient(f.c[3], 3);
  env["C43"] = exact_quotient(f.c[4], 9);
  env["C53"] = exact_quotient(f.c[5], 9);
  env["C52"] = exact_quotient(f.c[5], 8);
  for (auto& [k, v] : env)
    if (v) v->canonicalize();
  return env;
}

std::vector<SexticNum> power_basis(const SexticField& f) {
  std::vector<SexticNum> out;
  for (int t = 0; t < 6; ++t) out.push_back(PureNum::theta_power(6, f.m, t) / Rat(f.c[static_cast<std::size_t>(t)]));
  return out;
}

IntegralBasis build_basis(const SexticField& f, const SexticType& t) {
  const SexticType actual = classify(f.m);
  if (!(actual == t))
    throw Error(ErrorCode::CaseMismatch, "m = " + f.m.get_str() + " has type " + actual.name() + ", not " + t.name());
  IntegralBasis b;
  b.type = t;
  b.env = field_env(f);
  auto pw = power_basis(f);
  b.elements = {pw[0], pw[1], pw[2]};
  const auto& tt = table_for(t);
  for (const char* e : tt.basis) b.elements.push_back(eval_expr(e, f.m, b.env));
  return b;
}

IntegralBasis build_basis(const SexticField& f) { return build_basis(f, classify(f.m)); }

RatMatrix table_transition(const SexticType& t, const SexticField& f) {
  const auto& tt = table_for(t);
  const ExprEnv env = field_env(f);
  RatMatrix out(6, 6, Rat(0));
  for (std::size_t k = 0; k < 36; ++k) {
    SexticNum v = eval_expr(tt.transition[k], f.m, env);
    if (!v.is_rational()) throw Error(ErrorCode::Parse, std::string("irrational transition entry ") + tt.transition[k]);
    out(k / 6, k % 6) = v[0];
  }
  return out;
}

RatMatrix derived_transition(const IntegralBasis& b, const SexticField& f) {
  RatMatrix p = coefficient_matrix(b.elements);
  for (std::size_t t = 0; t < 6; ++t)
    for (std::size_t k = 0; k < 6; ++k) p(t, k) *= Rat(f.c[t]);
  return p;
}

CubicMatrix table_gram(const SexticType& t, const SexticField& f) {
  const auto& tt = table_for(t);
  const ExprEnv env = field_env(f);
  CubicMatrix out(6, 6);
  for (std::size_t k = 0; k < 36; ++k) out(k / 6, k % 6) = eval_cubic_expr(tt.gram[k], f.m, env) * CubicNum(6);
  return out;
}

CubicMatrix power_gram(const SexticField& f) { return bilinear_gram(power_basis(f)); }

std::array<std::vector<Int>, 20> type_corpus(int per_type) {
  std::array<std::vector<Int>, 20> out;
  int filled = 0;
  for (long a = 2; filled < 20; ++a) {
    for (long m : {a, -a}) {
      if (!is_sixth_power_free(m) || is_square_or_cube(m)) continue;
      const SexticType t = classify(Int(m));
      auto& v = out[static_cast<std::size_t>(t.index())];
      if (static_cast<int>(v.size()) < per_type) {
        v.push_back(Int(m));
        if (static_cast<int>(v.size()) == per_type) ++filled;
      }
    }
    if (a > 100000000) throw Error(ErrorCode::Internal, "corpus scan did not terminate");
  }
  return out;
}

}  // namespace sextic
