// Command-line front end; talks to the library only through the C interface.
#include "sextic.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

using nlohmann::json;

namespace {

struct Options {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
};

// Adds --name as a string option stored under `key` in the request.
void opt(CLI::App* app, Options& o, const std::string& name, const std::string& key, const std::string& help, bool required = false) {
  auto* option = app->add_option("--" + name, o.values[key], help);
  if (required) option->required();
}

void flag(CLI::App* app, Options& o, const std::string& name, const std::string& key, const std::string& help) {
  o.flags[key] = false;
  app->add_flag("--" + name, o.flags[key], help);
}

json build_request(const Options& o, CLI::App* app) {
  json req = json::object();
  for (const auto& [key, value] : o.values) {
    std::string name = key;
    for (auto& c : name)
      if (c == '_') c = '-';
    if (app->get_option("--" + name)->count() > 0) req[key] = value;
  }
  for (const auto& [key, value] : o.flags)
    if (value) req[key] = true;
  return req;
}

json list_of(const std::string& s) {
  json out = json::array();
  std::string item;
  for (char c : s) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num")) return v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
  return v.dump();
}

// Rows of a report as CSV, header taken from the first row.
bool write_csv(const json& doc, std::ostream& out) {
  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].empty()) return false;
  std::vector<std::string> cols;
  for (const auto& [k, v] : doc["rows"][0].items()) cols.push_back(k);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : doc["rows"]) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
    out << '\n';
  }
  return true;
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "csv" && write_csv(doc, out)) return;
  if (format == "pretty") out << doc.dump(2) << '\n';
  else out << doc.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral bases, Gram matrices, shapes and equidistribution checks for pure sextic fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir, format = "json", out_path;
  int digits = 20, workers = 0;
  long long seed = 1, prime_bound = 10000000;
  app.add_option("--cache-dir", cache_dir, "Density table cache directory (default: $SEXTIC_CACHE_DIR, else none)");
  app.add_option("--digits", digits, "Decimal digits for numeric renderings")->check(CLI::Range(1, 1000));
  app.add_option("--workers", workers, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for Monte Carlo estimates");
  app.add_option("--prime-bound", prime_bound, "Truncation of Euler products");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty", "csv"}));
  app.add_option("--out", out_path, "Write the result to this file instead of stdout");

  std::map<std::string, Options> opts;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    subs[name] = app.add_subcommand(name, help);
    opts[name];
    return subs[name];
  };

  bool json_flag = false;
  std::string m_help = "Radicand m";
  {
    auto* s = sub("classify", "Type (Ai,Bj) of m");
    opt(s, opts["classify"], "m", "m", m_help, true);
  }
  {
    auto* s = sub("basis", "Integral basis of Q(m^(1/6))");
    opt(s, opts["basis"], "m", "m", m_help, true);
  }
  {
    auto* s = sub("general-basis", "Integral basis of Q(m^(1/n)) for n-th-power-free m");
    opt(s, opts["general-basis"], "n", "n", "Degree n", true);
    opt(s, opts["general-basis"], "m", "m", m_help, true);
  }
  for (const char* name : {"gram", "shape"}) {
    auto* s = sub(name, std::string(name) == "gram" ? "Gram matrix of the integral basis" : "Shape parameters and certificate");
    opt(s, opts[name], "m", "m", m_help, true);
    s->add_flag("--json", json_flag, "JSON output (default)");
  }
  {
    auto* s = sub("geometry", "Lattice counts against volume or area main terms");
    auto& o = opts["geometry"];
    opt(s, o, "region", "region", "M3 or M2");
    opt(s, o, "ns", "ns", "Comma-separated bounds", true);
    opt(s, o, "l1p", "l1p", "L1'", true);
    opt(s, o, "l1", "l1", "L1", true);
    opt(s, o, "l2p", "l2p", "L2'");
    opt(s, o, "l2", "l2", "L2");
    opt(s, o, "mc-samples", "mc_samples", "Monte Carlo samples per row");
    flag(s, o, "brute", "brute", "Also count by brute force");
  }
  {
    auto* s = sub("density", "Local densities");
    auto& o = opts["density"];
    opt(s, o, "kind", "kind", "omega, n, m, crt or ratio", true);
    for (const char* k : {"l", "type", "sign", "a2", "a3", "a4", "a5", "free"}) opt(s, o, k, k, std::string("Parameter ") + k);
    flag(s, o, "carefree", "carefree", "Carefree model for ratio");
    flag(s, o, "exhaustive", "exhaustive", "Exhaustive omega counts");
    flag(s, o, "direct", "direct", "Direct mod-15552 count");
  }
  {
    auto* s = sub("euler", "Truncated Euler products");
    opt(s, opts["euler"], "kind", "kind", "basic or carefree");
    opt(s, opts["euler"], "bound", "bound", "Prime bound");
  }
  {
    auto* s = sub("measure", "Measure of a box");
    auto& o = opts["measure"];
    opt(s, o, "kind", "kind", "mu or nu");
    opt(s, o, "type", "type", "Type i,j");
    opt(s, o, "sign", "sign", "+ or -");
    opt(s, o, "mode", "mode", "literal or normalized");
    opt(s, o, "box", "box", "R1',R1,R2',R2,R3',R3", true);
  }
  {
    auto* s = sub("enumerate", "Enumerate one family at one bound");
    auto& o = opts["enumerate"];
    opt(s, o, "family", "family", "C or T");
    opt(s, o, "type", "type", "Type i,j");
    opt(s, o, "sign", "sign", "+ or -");
    opt(s, o, "box", "box", "R1',R1,R2',R2,R3',R3", true);
    opt(s, o, "n", "n", "Bound on a1^5 a2^4 a3^3 a4^4 a5^5", true);
    flag(s, o, "oracle", "oracle", "Compare with the naive scan");
  }
  {
    auto* s = sub("equidist", "Enumerate over a ladder of bounds and compare with predictions");
    auto& o = opts["equidist"];
    opt(s, o, "family", "family", "C or T");
    opt(s, o, "type", "type", "Type i,j");
    opt(s, o, "sign", "sign", "+ or -");
    opt(s, o, "box", "box", "R1',R1,R2',R2,R3',R3", true);
    opt(s, o, "ladder", "ladder", "Comma-separated increasing bounds", true);
  }
  {
    auto* s = sub("verify", "Identity suite over the per-Type corpus");
    opt(s, opts["verify"], "types", "types", "all, or Types separated by ';'");
    opt(s, opts["verify"], "per-type", "per_type", "Corpus size per Type");
  }
  {
    auto* s = sub("partition", "Type partition check over a range of m");
    opt(s, opts["partition"], "lo", "lo", "Lower end", true);
    opt(s, opts["partition"], "hi", "hi", "Upper end", true);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string op;
  for (const auto& [name, s] : subs)
    if (s->parsed()) op = name;

  json req = build_request(opts[op], subs[op]);
  for (const char* k : {"ns", "ladder"})
    if (req.contains(k)) req[k] = list_of(req[k].get<std::string>());
  if (op == "verify" && req.contains("types") && req["types"] == "all") req.erase("types");
  if (op == "verify" && !req.contains("types")) req["types"] = "all";

  const json config = {{"cache_dir", cache_dir}, {"digits", digits}, {"workers", workers}, {"seed", seed}, {"prime_bound", prime_bound}};
  sx_context* ctx = nullptr;
  if (sx_context_create(config.dump().c_str(), &ctx) != SX_OK) {
    std::cerr << "error: invalid configuration\n";
    return 2;
  }
  std::unique_ptr<sx_context, decltype(&sx_context_destroy)> guard(ctx, &sx_context_destroy);

  sx_result* res = nullptr;
  const sx_status st = sx_call(ctx, op.c_str(), req.dump().c_str(), &res);
  std::unique_ptr<sx_result, decltype(&sx_result_free)> rguard(res, &sx_result_free);
  if (st != SX_OK) {
    std::cerr << "error: " << sx_status_string(st) << ": " << sx_result_error(res) << '\n';
    return st == SX_INVALID_ARGUMENT || st == SX_PARSE_ERROR ? 2 : 1;
  }
  const json doc = json::parse(sx_result_json(res));
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 1;
    }
    emit(doc, format, f);
  } else {
    emit(doc, format, std::cout);
  }
  if (op == "verify" && !doc.value("ok", false)) return 1;
  return 0;
}
