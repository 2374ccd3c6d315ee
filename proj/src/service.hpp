#pragma once

#include "sextic/densities.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <string>

namespace sextic {

struct Config {
  std::string cache_dir;  // empty: SEXTIC_CACHE_DIR, else in-memory
  int digits = 20;
  int workers = 0;        // 0: hardware concurrency
  std::uint64_t seed = 1;
  long prime_bound = 10000000;
};

Config parse_config(const nlohmann::json& j);
nlohmann::json config_json(const Config& c);

class Service {
 public:
  explicit Service(Config cfg);
  const Config& config() const { return cfg_; }
  // Throws sextic::Error or nlohmann::json exceptions on bad requests.
  nlohmann::json call(const std::string& op, const nlohmann::json& request);

 private:
  Config cfg_;
  std::unique_ptr<DensityTables> tables_;
};

}  // namespace sextic
