#ifndef TGLIE_CONFIG_HPP
#define TGLIE_CONFIG_HPP

#include <json.hpp>

#include "model.hpp"

namespace tglie {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  long long mode_window = 2;
  int exponent_window = 1;
  int max_degree = 3;
  int samples = 50;
  uint64_t seed = 1;
};

struct Config {
  QuadrupleSpec quad;
  TKind tkind = TKind::Trivial;
  std::optional<std::vector<std::vector<long long>>> epsC_overrides;
  std::optional<std::vector<long long>> eta_overrides;
  SweepConfig sweep;
  std::optional<std::string> realization;
  int realization_N = 2;

  /// Throws ConfigError with a field diagnostic on malformed input.
  static Config from_json(const nlohmann::json& j);
  static Config from_file(const std::string& path);
  nlohmann::json to_json() const;

  ModelOptions model_options() const;
};

}  // namespace tglie

#endif
