#ifndef TGLIE_RUNNER_HPP
#define TGLIE_RUNNER_HPP

#include "config.hpp"
#include "identities.hpp"
#include "realizations.hpp"

namespace tglie {

struct CheckRecord {
  std::string id;
  enum Status { Pass = 0, Fail = 1, Vacuous = 2 } status = Pass;
  nlohmann::json witness;  // null when absent
};

struct Report {
  std::string command;
  uint64_t seed = 0;
  std::vector<CheckRecord> records;

  void add(const std::string& id, bool pass, nlohmann::json witness = nullptr);
  void add_vacuous(const std::string& id, nlohmann::json witness = nullptr);
  void merge(const Report& o);
  bool ok() const;
  int fails() const;
  nlohmann::json to_json() const;  // records sorted by id, deterministic
  std::string summary_line() const;
};

struct RunFlags {
  int jobs = 1;
  long long window = 0;      // 0: keep config/default
  int max_degree = 0;        // 0: keep config
  int samples = 0;           // 0: keep config
  std::optional<uint64_t> seed;
};

/// serialization used by the export and the failure witnesses
nlohmann::json laurent_to_json(const LaurentPoly& p);
nlohmann::json scalar_to_json(const Scalar& s);
nlohmann::json genkey_to_json(const GenKey& k);
nlohmann::json fock_to_json(const FockVector& v);

Report run_check(const Config& cfg, const RunFlags& flags);
Report run_constants(const Config& cfg, const RunFlags& flags,
                     nlohmann::json* table_out);
Report run_verify_theorem(const Config& cfg, const RunFlags& flags);
Report run_verify_identities(const Config& cfg, const RunFlags& flags);
Report run_realization(const Config& cfg, const std::string& name, int N,
                       const RunFlags& flags);
Report run_all(const Config& cfg, const RunFlags& flags);

}  // namespace tglie

#endif
