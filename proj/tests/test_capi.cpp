#include "sextic.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using json = nlohmann::json;

namespace {

struct Ctx {
  sx_context* ctx = nullptr;
  explicit Ctx(const char* cfg = nullptr) { REQUIRE(sx_context_create(cfg, &ctx) == SX_OK); }
  ~Ctx() { sx_context_destroy(ctx); }

  std::pair<sx_status, json> call(const char* op, const char* req) {
    sx_result* r = nullptr;
    const sx_status s = sx_call(ctx, op, req, &r);
    REQUIRE(r != nullptr);
    CHECK(sx_result_status(r) == s);
    json j = json::parse(sx_result_json(r));
    if (s != SX_OK) CHECK(std::string(sx_result_error(r)) == j.at("message").get<std::string>());
    sx_result_free(r);
    return {s, j};
  }
};

}  // namespace

TEST_CASE("C API classify") {
  Ctx c;
  const auto [s, j] = c.call("classify", R"({"m": 112})");
  CHECK(s == SX_OK);
  CHECK(j.at("op") == "classify");
  CHECK(j.at("type") == "A5,B1");
}

TEST_CASE("C API error codes") {
  Ctx c;
  CHECK(c.call("classify", "{").first == SX_PARSE_ERROR);
  const auto [s, j] = c.call("basis", R"({"m": 4})");
  CHECK(s == SX_REDUCIBLE);
  CHECK(j.at("error") == "Reducible");
  CHECK(c.call("classify", R"({"m": 64})").first == SX_NOT_SIXTH_POWER_FREE);
  CHECK(c.call("nope", "{}").first == SX_INVALID_ARGUMENT);
  CHECK(c.call("classify", "{}").first == SX_INVALID_ARGUMENT);
}

TEST_CASE("C API argument checks") {
  sx_result* r = nullptr;
  CHECK(sx_call(nullptr, "classify", "{}", &r) == SX_INVALID_ARGUMENT);
  sx_result_free(r);
  sx_context* ctx = nullptr;
  CHECK(sx_context_create("[1]", &ctx) == SX_INVALID_ARGUMENT);
  CHECK(ctx == nullptr);
  CHECK(sx_context_create("{\"digits\": 0}", &ctx) == SX_INVALID_ARGUMENT);
  CHECK(sx_context_create("{", &ctx) == SX_PARSE_ERROR);
  CHECK(sx_context_create(nullptr, nullptr) == SX_INVALID_ARGUMENT);
  CHECK(std::string(sx_status_string(SX_OK)) == "Ok");
  CHECK(std::string(sx_status_string(SX_INVALID_PAIR)).size() > 0);
  CHECK(std::string(sx_version()) == "1.0.0");
  sx_result_free(nullptr);
  sx_context_destroy(nullptr);
}

TEST_CASE("C API config echo and numbers") {
  Ctx c(R"({"digits": 12, "seed": 9})");
  const auto [s, j] = c.call("euler", R"({"kind": "basic", "bound": "1e5"})");
  CHECK(s == SX_OK);
  CHECK(j.at("config").at("digits") == 12);
  CHECK(j.at("config").at("seed") == 9);
  const auto [s2, j2] = c.call("gram", R"({"m": "-3"})");
  CHECK(s2 == SX_OK);
  CHECK(j2.at("positive_definite") == true);
}
