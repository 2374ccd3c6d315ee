#include "sextic.h"

#include "service.hpp"

#include <json.hpp>

#include <memory>
#include <new>
#include <string>

struct sx_context {
  std::unique_ptr<sextic::Service> service;
};

struct sx_result {
  sx_status status = SX_OK;
  std::string json;
  std::string error;
};

namespace {

using nlohmann::json;

sx_status to_status(sextic::ErrorCode c) { return static_cast<sx_status>(static_cast<int>(c)); }

template <class F>
sx_status guarded(F&& f, std::string& message) {
  try {
    f();
    return SX_OK;
  } catch (const sextic::Error& e) {
    message = e.what();
    return to_status(e.code());
  } catch (const json::parse_error& e) {
    message = e.what();
    return SX_PARSE_ERROR;
  } catch (const json::exception& e) {
    message = e.what();
    return SX_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    message = "out of memory";
    return SX_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    message = e.what();
    return SX_INTERNAL_ERROR;
  } catch (...) {
    message = "unknown failure";
    return SX_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

sx_status sx_context_create(const char* config_json, sx_context** out) {
  if (!out) return SX_INVALID_ARGUMENT;
  *out = nullptr;
  std::string message;
  std::unique_ptr<sx_context> ctx;
  const sx_status s = guarded(
      [&] {
        const json cfg = config_json && *config_json ? json::parse(config_json) : json();
        ctx = std::make_unique<sx_context>();
        ctx->service = std::make_unique<sextic::Service>(sextic::parse_config(cfg));
      },
      message);
  if (s == SX_OK) *out = ctx.release();
  return s;
}

void sx_context_destroy(sx_context* ctx) {
  try {
    delete ctx;
  } catch (...) {
  }
}

sx_status sx_call(sx_context* ctx, const char* op, const char* request_json, sx_result** out) {
  sx_result* r = nullptr;
  try {
    r = new sx_result;
  } catch (...) {
    if (out) *out = nullptr;
    return SX_INTERNAL_ERROR;
  }
  if (!ctx || !op) {
    r->status = SX_INVALID_ARGUMENT;
    r->error = "null context or operation";
  } else {
    r->status = guarded(
        [&] {
          const json req = request_json && *request_json ? json::parse(request_json) : json::object();
          r->json = ctx->service->call(op, req).dump();
        },
        r->error);
  }
  if (r->status != SX_OK) {
    try {
      r->json = json{{"error", sx_status_string(r->status)}, {"message", r->error}}.dump();
    } catch (...) {
      r->json = "{}";
    }
  }
  const sx_status s = r->status;
  if (out) *out = r;
  else delete r;
  return s;
}

sx_status sx_result_status(const sx_result* r) { return r ? r->status : SX_INVALID_ARGUMENT; }
const char* sx_result_json(const sx_result* r) { return r ? r->json.c_str() : ""; }
const char* sx_result_error(const sx_result* r) { return r ? r->error.c_str() : ""; }
void sx_result_free(sx_result* r) { delete r; }

const char* sx_status_string(sx_status status) {
  if (status == SX_OK) return "Ok";
  if (status < SX_INVALID_ARGUMENT || status > SX_INTERNAL_ERROR) return "Unknown";
  return sextic::error_name(static_cast<sextic::ErrorCode>(static_cast<int>(status)));
}

const char* sx_version(void) { return "1.0.0"; }

}  // extern "C"
