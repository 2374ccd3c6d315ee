#include "service.hpp"

#include "sextic/basis.hpp"
#include "sextic/equidist.hpp"
#include "sextic/general_basis.hpp"
#include "sextic/gram_shape.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace sextic {

using json = nlohmann::json;

namespace {

// ---- request parsing

Int j_int(const json& j) {
  if (j.is_string()) {
    const std::string t = j.get<std::string>();
    const auto e = t.find_first_of("eE");
    if (e != std::string::npos && e > 0 && e + 1 < t.size() && t.find_first_not_of("0123456789", e + 1) == std::string::npos) {
      Int mant, p10;
      if (mant.set_str(t.substr(0, e), 10) != 0) throw Error(ErrorCode::InvalidArgument, "not an integer: " + t);
      mpz_ui_pow_ui(p10.get_mpz_t(), 10, std::stoul(t.substr(e + 1)));
      return mant * p10;
    }
    Int x;
    if (x.set_str(t, 10) != 0) throw Error(ErrorCode::InvalidArgument, "not an integer: " + j.get<std::string>());
    return x;
  }
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (d != std::floor(d) || std::fabs(d) > 1e18) throw Error(ErrorCode::InvalidArgument, "not an integer");
    return Int(std::to_string(static_cast<long long>(d)));
  }
  if (j.is_object() && j.contains("num")) {
    const Rat r = Rat(j_int(j.at("num")), j_int(j.value("den", json("1"))));
    if (!is_integer(r)) throw Error(ErrorCode::InvalidArgument, "not an integer");
    return Rat(r).get_num();
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer");
}

Rat j_rat(const json& j) {
  if (j.is_string()) {
    const std::string t = j.get<std::string>();
    return t.find_first_of("eE") != std::string::npos ? Rat(j_int(j)) : rat_from_string(t);
  }
  if (j.is_number_integer()) return Rat(j_int(j));
  if (j.is_number_float()) return Rat(j.get<double>());
  if (j.is_object() && j.contains("num")) {
    Rat r(j_int(j.at("num")), j_int(j.value("den", json("1"))));
    r.canonicalize();
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "expected a rational");
}

long j_long(const json& j) {
  const Int x = j_int(j);
  if (!x.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer out of range");
  return x.get_si();
}

const json& need(const json& req, const char* key) {
  if (!req.is_object() || !req.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field: ") + key);
  return req.at(key);
}

int j_sign(const json& req) {
  if (!req.contains("sign")) return 1;
  const json& s = req.at("sign");
  if (s.is_string()) {
    const std::string v = s.get<std::string>();
    if (v == "+" || v == "+1" || v == "1") return 1;
    if (v == "-" || v == "-1") return -1;
  } else if (s.is_number_integer()) {
    if (s.get<int>() == 1) return 1;
    if (s.get<int>() == -1) return -1;
  }
  throw Error(ErrorCode::InvalidArgument, "sign must be + or -");
}

SexticType j_type(const json& req) {
  if (!req.contains("type")) return {1, 1};
  return parse_type(req.at("type").get<std::string>());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

Box3 j_box(const json& j) {
  std::vector<Rat> v;
  if (j.is_string()) {
    for (const auto& s : split(j.get<std::string>(), ',')) v.push_back(rat_from_string(s));
  } else if (j.is_array()) {
    for (const auto& x : j) v.push_back(j_rat(x));
  }
  if (v.size() != 6) throw Error(ErrorCode::InvalidArgument, "box needs six bounds R1',R1,R2',R2,R3',R3");
  Box3 b;
  for (int k = 0; k < 3; ++k) {
    b.lo[k] = v[2 * k];
    b.hi[k] = v[2 * k + 1];
  }
  return b;
}

// ---- response building

json rat_json(const Rat& x) { return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

json rat_vec(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

json cubic_json(const CubicNum& x, int digits) {
  json q = json::array();
  for (int i = 0; i < 3; ++i) q.push_back(rat_json(x[i]));
  return {{"radicand", x.radicand().get_str()}, {"coeffs", q}, {"text", x.str()}, {"decimal", x.decimal(digits)}};
}

json rat_matrix(const RatMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(rat_json(a(i, j)));
    out.push_back(row);
  }
  return out;
}

json cubic_matrix(const CubicMatrix& a, int digits) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(cubic_json(a(i, j), digits));
    out.push_back(row);
  }
  return out;
}

json mono_json(const RadicalMonomial& m, const std::vector<Int>& a, int digits) {
  json out = {{"coeff", rat_json(m.coeff)}, {"exps", rat_vec(m.exps)}, {"text", m.str()}};
  if (!a.empty()) out["decimal"] = m.decimal(a, digits);
  return out;
}

json tuple_json(const CarefreeTuple& t) {
  json a = json::array();
  for (const Int& x : t.a) a.push_back(x.get_str());
  return {{"sign", t.sign}, {"a", a}};
}

template <std::size_t K>
json int_arr(const std::array<Int, K>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json ld_json(long double x) { return static_cast<double>(x); }

int digits_of(const json& req, const Config& c) { return req.contains("digits") ? static_cast<int>(j_long(req.at("digits"))) : c.digits; }

Rat cubic_to_rat(const CubicNum& x) {
  if (!x.is_rational()) throw Error(ErrorCode::Internal, "expected a rational value: " + x.str());
  return x[0];
}

// ---- ops

json op_classify(const json& req) {
  const SexticField f = SexticField::make(j_int(need(req, "m")));
  const SexticType t = classify(f.m);
  return {{"m", f.m.get_str()}, {"type", t.name()}, {"i", t.i}, {"j", t.j}, {"tuple", tuple_json(f.tuple)}, {"canonical", f.canonical}};
}

json op_basis(const json& req) {
  const SexticField f = SexticField::make(j_int(need(req, "m")));
  const IntegralBasis b = build_basis(f);
  json elems = json::array(), text = json::array();
  for (const auto& e : b.elements) {
    elems.push_back(rat_vec(e.coeffs()));
    text.push_back(e.str());
  }
  const RatMatrix p = derived_transition(b, f);
  return {{"m", f.m.get_str()},
          {"type", b.type.name()},
          {"elements", elems},
          {"text", text},
          {"transition", rat_matrix(p)},
          {"table_transition_match", p == table_transition(b.type, f)}};
}

json disc_json(const DiscValuations& d) {
  json wild = json::object(), radical = json::object();
  for (const auto& [p, v] : d.wild) wild[p.get_str()] = v;
  for (const auto& [p, v] : d.radical) radical[p.get_str()] = v;
  return {{"wild", wild}, {"radical", radical}, {"abs", d.abs_value().get_str()}};
}

json op_general_basis(const json& req) {
  const int n = static_cast<int>(j_long(need(req, "n")));
  const Int m = j_int(need(req, "m"));
  const auto basis = general_integral_basis(n, m);
  json elems = json::array(), text = json::array();
  for (const auto& e : basis) {
    elems.push_back(rat_vec(e.coeffs()));
    text.push_back(e.str());
  }
  const PureTuple t = decompose_general(n, m);
  json lambda = json::array();
  std::vector<Int> a(t.a.begin() + 1, t.a.end());
  for (const auto& l : general_shape_params(t)) lambda.push_back(mono_json(l, a, 20));
  json out = {{"n", n}, {"m", m.get_str()}, {"elements", elems}, {"text", text}, {"disc", disc_json(disc_valuations(n, m))}, {"shape_params", lambda}};
  if (n == 6 && !is_square_or_cube(m.get_si()) && m.fits_slong_p()) {
    const SexticField f = SexticField::make(m);
    out["same_lattice_as_type_basis"] = same_lattice(basis, build_basis(f).elements);
  }
  return out;
}

json op_gram(const json& req, const Config& cfg) {
  const SexticField f = SexticField::make(j_int(need(req, "m")));
  const int digits = digits_of(req, cfg);
  const IntegralBasis b = build_basis(f);
  const CubicMatrix g = gram6(f);
  const CubicMatrix cong = congruence(derived_transition(b, f), hermitian_gram(power_basis(f)));
  const Rat d = cubic_to_rat(det(g));
  return {{"m", f.m.get_str()},
          {"type", b.type.name()},
          {"gram", cubic_matrix(g, digits)},
          {"det", rat_json(d)},
          {"table_match", table_gram(b.type, f) == bilinear_gram(b.elements)},
          {"congruence_match", g == cong},
          {"positive_definite", is_positive_definite(g)}};
}

json op_shape(const json& req, const Config& cfg) {
  const SexticField f0 = SexticField::make(j_int(need(req, "m")));
  const SexticField f = SexticField::make(canonical(f0.tuple).m());
  const int digits = digits_of(req, cfg);
  const std::vector<Int> a = tuple_values(f.tuple);
  json lambda = json::array(), diag = json::array(), expected = json::array();
  for (const auto& l : shape_params(f)) lambda.push_back(mono_json(l, a, digits));
  const auto nd = normalized_diagonal(f);
  for (const auto& x : nd) diag.push_back(mono_json(x, a, digits));
  const auto ed = expected_shape_diagonal();
  for (const auto& x : ed) expected.push_back(mono_json(x, a, digits));
  const ShapeGram g = shape_gram(f);
  return {{"m", f0.m.get_str()},
          {"m_used", f.m.get_str()},
          {"tuple", tuple_json(f.tuple)},
          {"type", classify(f.m).name()},
          {"lambda", lambda},
          {"normalized_diagonal", diag},
          {"expected_diagonal", expected},
          {"diagonal_matches", nd == ed},
          {"certificate_holds", g.certificate_holds}};
}

json op_geometry(const json& req, const Config& cfg) {
  const std::string region = req.value("region", std::string("M3"));
  std::vector<Rat> ns;
  for (const auto& x : need(req, "ns")) ns.push_back(j_rat(x));
  const Rat l1p = j_rat(need(req, "l1p")), l1 = j_rat(need(req, "l1"));
  const bool brute = req.value("brute", false);
  json rows = json::array();
  ErrorLaw law;
  if (region == "M3") {
    const Rat l2p = j_rat(need(req, "l2p")), l2 = j_rat(need(req, "l2"));
    law = error_law_M3(ns, l1p, l1, l2p, l2);
    const std::uint64_t samples = req.contains("mc_samples") ? static_cast<std::uint64_t>(j_long(req.at("mc_samples"))) : 0;
    for (const auto& r : law.rows) {
      json row = {{"n", rat_json(r.n)}, {"count", r.count.get_str()}, {"main", ld_json(r.main_term)}, {"scaled_error", ld_json(r.scaled_error)}};
      const RegionM3 reg{r.n, l1p, l1, l2p, l2};
      if (brute) row["brute_count"] = count_lattice_M3_brute(reg).get_str();
      if (samples > 0) {
        const auto mc = monte_carlo_M3(reg, samples, cfg.seed);
        row["monte_carlo"] = {{"value", ld_json(mc.value)}, {"std_error", ld_json(mc.std_error)}, {"samples", mc.samples}};
      }
      rows.push_back(row);
    }
  } else if (region == "M2") {
    law = error_law_M2(ns, l1p, l1);
    for (const auto& r : law.rows) {
      json row = {{"n", rat_json(r.n)}, {"count", r.count.get_str()}, {"main", ld_json(r.main_term)}, {"scaled_error", ld_json(r.scaled_error)}};
      if (brute) row["brute_count"] = count_lattice_M2_brute(r.n, l1p, l1).get_str();
      rows.push_back(row);
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "region must be M3 or M2");
  }
  return {{"region", region}, {"rows", rows}, {"spread", ld_json(law.spread)}, {"exponent", region == "M3" ? "1/10" : "1/2"}};
}

json op_density(const json& req, DensityTables& tables) {
  const std::string kind = need(req, "kind").get<std::string>();
  if (kind == "omega") {
    const long l = j_long(need(req, "l"));
    json out = {{"l", l}, {"closed", omega_count_closed(l).get_str()}, {"product_form", omega_count_product_form(l).get_str()}};
    if (req.value("exhaustive", false)) {
      out["exhaustive"] = omega_count_exhaustive(l).get_str();
      out["pairwise_exhaustive"] = omega_count_pairwise_exhaustive(l).get_str();
    }
    return out;
  }
  const SexticType t = j_type(req);
  const int sign = j_sign(req);
  if (kind == "n") {
    const long a2 = j_long(need(req, "a2")), a4 = j_long(need(req, "a4"));
    return {{"type", t.name()}, {"sign", sign}, {"n2", int_arr(tables.n2(sign, a2, a4))}, {"n3", int_arr(tables.n3(sign, a2, a4))},
            {"n_table", tables.n_table(t, sign, a2, a4).get_str()}, {"residues", "15552^3"}};
  }
  if (kind == "m") {
    const long a2 = j_long(need(req, "a2")), a3 = j_long(need(req, "a3")), a4 = j_long(need(req, "a4"));
    json out = {{"type", t.name()}, {"sign", sign}, {"m_table", tables.m_table(t, sign, a2, a3, a4).get_str()}, {"residues", "15552^2"}};
    if (req.value("direct", false)) out["direct"] = m_table_direct15552(t, sign, a2, a3, a4).get_str();
    return out;
  }
  if (kind == "crt") {
    const long a2 = j_long(need(req, "a2")), a4 = j_long(need(req, "a4")), a5 = j_long(need(req, "a5"));
    const Int crt = n2_slice(sign, a2, a4, a5)[static_cast<std::size_t>(t.i - 1)] * n3_slice(sign, a2, a4, a5)[static_cast<std::size_t>(t.j - 1)];
    const Int direct = n_slice_direct15552(t, sign, a2, a4, a5);
    return {{"type", t.name()}, {"sign", sign}, {"crt", crt.get_str()}, {"direct", direct.get_str()}, {"match", crt == direct}};
  }
  if (kind == "ratio") {
    const LocalRatio r = local_ratio(j_long(need(req, "l")), static_cast<int>(j_long(req.value("free", json(3)))), req.value("carefree", false));
    return {{"l", r.l}, {"free_coords", r.free_coords}, {"carefree_model", r.carefree_model}, {"coprime_count", r.coprime_count.get_str()},
            {"divisible_count", r.divisible_count.get_str()}, {"ratio", rat_json(r.ratio)}, {"predicted_plus2", rat_json(r.predicted_plus2)},
            {"predicted_plus1", rat_json(r.predicted_plus1)}};
  }
  throw Error(ErrorCode::InvalidArgument, "density kind must be omega, n, m, crt or ratio");
}

json op_euler(const json& req, const Config& cfg) {
  const std::string kind = req.value("kind", std::string("basic"));
  const EulerKind k = kind == "carefree" ? EulerKind::Carefree : kind == "basic" ? EulerKind::Basic : throw Error(ErrorCode::InvalidArgument, "kind must be basic or carefree");
  std::vector<long> exclude{2, 3};
  if (req.contains("exclude")) {
    exclude.clear();
    for (const auto& x : req.at("exclude")) exclude.push_back(j_long(x));
  }
  const long bound = req.contains("bound") ? j_long(req.at("bound")) : cfg.prime_bound;
  const EulerProduct e = euler_product(k, exclude, bound);
  json out = {{"kind", kind}, {"bound", bound}, {"value", ld_json(e.value)}, {"tail_bound", ld_json(e.tail_bound)}};
  if (k == EulerKind::Basic) out["reference"] = ld_json(9.0L / (3.14159265358979323846264338327950288L * 3.14159265358979323846264338327950288L));
  return out;
}

json op_measure(const json& req, DensityTables& tables, const Config& cfg) {
  MeasureSpec s;
  const std::string kind = req.value("kind", std::string("mu"));
  s.kind = kind == "nu" ? MeasureKind::Nu : MeasureKind::Mu;
  s.type = j_type(req);
  s.sign = j_sign(req);
  s.mode = req.value("mode", std::string("literal")) == "normalized" ? MeasureMode::DensityNormalized : MeasureMode::Literal;
  s.prime_bound = req.contains("prime_bound") ? j_long(req.at("prime_bound")) : cfg.prime_bound;
  const MeasureValue v = integrate_measure(tables, s, j_box(need(req, "box")));
  return {{"kind", kind}, {"type", s.type.name()}, {"sign", s.sign}, {"mode", s.mode == MeasureMode::Literal ? "literal" : "normalized"},
          {"value", ld_json(v.value)}, {"error_bound", ld_json(v.error_bound)}};
}

EnumSpec j_enum_spec(const json& req, const Config& cfg) {
  EnumSpec s;
  s.family = parse_family(req.value("family", std::string("C")));
  s.type = j_type(req);
  s.sign = j_sign(req);
  s.box = j_box(need(req, "box"));
  s.workers = req.contains("workers") ? static_cast<int>(j_long(req.at("workers"))) : cfg.workers;
  if (req.contains("n")) s.n = j_int(req.at("n"));
  s.carefree = req.value("carefree", true);
  return s;
}

json box_json(const Box3& b) {
  json out = json::array();
  for (int k = 0; k < 3; ++k) {
    out.push_back(rat_json(b.lo[k]));
    out.push_back(rat_json(b.hi[k]));
  }
  return out;
}

json spec_json(const EnumSpec& s) {
  return {{"family", family_name(s.family)}, {"type", s.type.name()}, {"sign", s.sign}, {"box", box_json(s.box)}, {"carefree", s.carefree}};
}

json tuples_json(const std::vector<Tuple5>& v) {
  json out = json::array();
  for (const auto& t : v) out.push_back(t);
  return out;
}

json op_enumerate(const json& req, const Config& cfg) {
  EnumSpec s = j_enum_spec(req, cfg);
  s.collect = req.value("collect", true);
  const EnumResult r = enumerate(s);
  json out = {{"spec", spec_json(s)}, {"n", s.n.get_str()}, {"raw_count", r.raw_count.get_str()}, {"carefree_count", r.carefree_count.get_str()}};
  if (s.collect) out["tuples"] = tuples_json(r.tuples);
  if (req.value("oracle", false)) {
    const auto o = naive_oracle(s);
    out["oracle_count"] = o.size();
    out["oracle_equal"] = o == r.tuples;
  }
  return out;
}

json op_equidist(const json& req, DensityTables& tables, const Config& cfg) {
  const EnumSpec s = j_enum_spec(req, cfg);
  std::vector<Int> ladder;
  const json& l = need(req, "ladder");
  if (l.is_string()) {
    for (const auto& x : split(l.get<std::string>(), ',')) ladder.push_back(j_int(json(x)));
  } else {
    for (const auto& x : l) ladder.push_back(j_int(x));
  }
  const HarnessReport rep = compare(s, ladder, tables, req.contains("prime_bound") ? j_long(req.at("prime_bound")) : cfg.prime_bound);
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"n", r.n.get_str()},
                {"raw_count", r.raw_count.get_str()},
                {"carefree_count", r.carefree_count.get_str()},
                {"raw_predicted", ld_json(r.raw_predicted)},
                {"measure_literal", ld_json(r.measure_literal)},
                {"measure_normalized", ld_json(r.measure_normalized)},
                {"exact_local", ld_json(r.exact_local)},
                {"ratio_normalized", ld_json(r.ratio_normalized)},
                {"ratio_exact_local", ld_json(r.ratio_exact_local)}};
    if (s.family == Family::T) {
      row["linear_literal"] = ld_json(r.linear_literal);
      row["fifth_root"] = ld_json(r.fifth_root);
    }
    rows.push_back(row);
  }
  return {{"spec", spec_json(s)},
          {"rows", rows},
          {"fit", {{"slope", ld_json(rep.fit.slope)}, {"std_error", ld_json(rep.fit.std_error)}, {"intercept", ld_json(rep.fit.intercept)}, {"points", rep.fit.points}}},
          {"supported_exponent", rep.supported_exponent}};
}

// Prime-to-6 part of |x|.
Int strip6(Int x) {
  if (x < 0) x = -x;
  while (x % 2 == 0) x /= 2;
  while (x % 3 == 0) x /= 3;
  return x;
}

json op_verify(const json& req) {
  std::vector<int> types;
  const json tj = req.value("types", json("all"));
  if (tj.is_string() && tj.get<std::string>() == "all") {
    for (int k = 0; k < 20; ++k) types.push_back(k);
  } else {
    const auto list = tj.is_string() ? split(tj.get<std::string>(), ';') : tj.get<std::vector<std::string>>();
    for (const auto& s : list) types.push_back(parse_type(s).index());
  }
  const int per_type = req.contains("per_type") ? static_cast<int>(j_long(req.at("per_type"))) : 25;
  const auto corpus = type_corpus(per_type);
  const char* names[] = {"gram_table", "gram_congruence", "transition", "integrality", "discriminant", "certificate", "diagonal"};
  json out_types = json::array();
  bool all_ok = true;
  for (int idx : types) {
    const SexticType t = type_from_index(idx);
    std::map<std::string, int> pass;
    for (const char* n : names) pass[n] = 0;
    json failures = json::array();
    for (const Int& m : corpus[static_cast<std::size_t>(idx)]) {
      std::map<std::string, bool> ok;
      try {
        const SexticField f = SexticField::make(m);
        const IntegralBasis b = build_basis(f, t);
        const CubicMatrix g = gram6(f);
        ok["gram_table"] = table_gram(t, f) == bilinear_gram(b.elements);
        const RatMatrix p = derived_transition(b, f);
        ok["gram_congruence"] = g == congruence(p, hermitian_gram(power_basis(f)));
        ok["transition"] = p == table_transition(t, f);
        bool integral = true;
        for (const auto& e : b.elements) integral = integral && e.is_algebraic_integer();
        ok["integrality"] = integral;
        const Rat d = cubic_to_rat(det(g));
        bool disc = is_integer(d);
        if (disc) {
          const Int dd = d.get_num();
          Int expect = 1;
          const int w[5] = {5, 4, 3, 4, 5};
          for (int k = 0; k < 5; ++k)
            for (int e = 0; e < w[k]; ++e) expect *= f.tuple.a[static_cast<std::size_t>(k)];
          disc = strip6(dd) == strip6(expect);
          if (disc && assumption_holds(6, m)) {
            const DiscValuations dv = disc_valuations(6, m);
            disc = valuation(dd, Int(2)) == dv.total(Int(2)) && valuation(dd, Int(3)) == dv.total(Int(3));
          }
        }
        ok["discriminant"] = disc;
        ok["certificate"] = shape_gram(f).certificate_holds;
        ok["diagonal"] = !(t == SexticType{1, 1}) || normalized_diagonal(f) == expected_shape_diagonal();
      } catch (const Error& e) {
        failures.push_back({{"m", m.get_str()}, {"error", error_name(e.code())}, {"message", e.what()}});
        all_ok = false;
        continue;
      }
      json failed = json::array();
      for (const auto& [k, v] : ok) {
        if (v) ++pass[k];
        else failed.push_back(k);
      }
      if (!failed.empty()) {
        failures.push_back({{"m", m.get_str()}, {"failed", failed}});
        all_ok = false;
      }
    }
    const int count = static_cast<int>(corpus[static_cast<std::size_t>(idx)].size());
    if (count < per_type) all_ok = false;
    out_types.push_back({{"type", t.name()}, {"count", count}, {"pass", pass}, {"failures", failures}});
  }
  return {{"per_type", per_type}, {"types", out_types}, {"ok", all_ok}};
}

json op_partition(const json& req) {
  const PartitionReport r = type_partition_check(j_long(need(req, "lo")), j_long(need(req, "hi")));
  json per = json::object();
  for (int k = 0; k < 20; ++k) per[type_from_index(k).name()] = r.per_type[static_cast<std::size_t>(k)];
  return {{"lo", r.lo}, {"hi", r.hi}, {"checked", r.checked}, {"violations", r.violations}, {"violating", r.violating}, {"per_type", per},
          {"residue_constancy_violations", residue_constancy_violations()}};
}

}  // namespace

Config parse_config(const json& j) {
  Config c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  c.cache_dir = j.value("cache_dir", c.cache_dir);
  if (j.contains("digits")) c.digits = static_cast<int>(j_long(j.at("digits")));
  if (j.contains("workers")) c.workers = static_cast<int>(j_long(j.at("workers")));
  if (j.contains("seed")) c.seed = static_cast<std::uint64_t>(j_long(j.at("seed")));
  if (j.contains("prime_bound")) c.prime_bound = j_long(j.at("prime_bound"));
  if (c.digits < 1 || c.digits > 1000) throw Error(ErrorCode::InvalidArgument, "digits must be in [1, 1000]");
  if (c.workers < 0) throw Error(ErrorCode::InvalidArgument, "workers must be >= 0");
  return c;
}

json config_json(const Config& c) {
  return {{"cache_dir", c.cache_dir}, {"digits", c.digits}, {"workers", c.workers}, {"seed", c.seed}, {"prime_bound", c.prime_bound}};
}

Service::Service(Config cfg) : cfg_(std::move(cfg)), tables_(std::make_unique<DensityTables>(cfg_.cache_dir)) {}

json Service::call(const std::string& op, const json& req) {
  json out;
  if (op == "classify") out = op_classify(req);
  else if (op == "basis") out = op_basis(req);
  else if (op == "general-basis") out = op_general_basis(req);
  else if (op == "gram") out = op_gram(req, cfg_);
  else if (op == "shape") out = op_shape(req, cfg_);
  else if (op == "geometry") out = op_geometry(req, cfg_);
  else if (op == "density") out = op_density(req, *tables_);
  else if (op == "euler") out = op_euler(req, cfg_);
  else if (op == "measure") out = op_measure(req, *tables_, cfg_);
  else if (op == "enumerate") out = op_enumerate(req, cfg_);
  else if (op == "equidist") out = op_equidist(req, *tables_, cfg_);
  else if (op == "verify") out = op_verify(req);
  else if (op == "partition") out = op_partition(req);
  else throw Error(ErrorCode::InvalidArgument, "unknown operation: " + op);
  if (op == "density" || op == "measure" || op == "equidist") tables_->flush();
  out["op"] = op;
  out["config"] = config_json(cfg_);
  out["config"]["cache_dir"] = tables_->dir();
  return out;
}

}  // namespace sextic
