#include "config.hpp"

#include <fstream>

namespace tglie {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const std::string& name) {
  if (!j.contains(name)) throw ConfigError("missing field: " + name);
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad field '" + name + "': " + e.what());
  }
}

template <typename T>
T field_or(const json& j, const std::string& name, T def) {
  if (!j.contains(name)) return def;
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad field '" + name + "': " + e.what());
  }
}

}  // namespace

Config Config::from_json(const json& j) {
  Config c;
  if (!j.contains("quadruple")) throw ConfigError("missing field: quadruple");
  const json& q = j.at("quadruple");
  c.quad.N = field<int>(q, "N");
  if (c.quad.N < 1) throw ConfigError("N must be positive");
  c.quad.q_basis.clear();
  for (const auto& row : field<std::vector<std::vector<long long>>>(q, "Q_basis"))
    c.quad.q_basis.push_back(IntVec(row.begin(), row.end()));
  // 1-based permutation in the file
  auto sigma = field<std::vector<int>>(q, "sigma");
  c.quad.sigma.clear();
  for (int x : sigma) {
    if (x < 1 || x > c.quad.N) throw ConfigError("sigma entries must lie in 1..N");
    c.quad.sigma.push_back(x - 1);
  }
  c.quad.iota = field<std::vector<int>>(q, "iota");
  c.quad.m = field<int>(q, "m");
  c.quad.gamma_rank = field<int>(q, "gamma_rank");
  c.quad.conductor = field_or<int>(q, "conductor", 0);
  if (c.quad.m < 1) throw ConfigError("m must be positive");
  {
    int m0 = c.quad.m % 2 == 0 ? c.quad.m : 2 * c.quad.m;
    if (c.quad.conductor != 0 && c.quad.conductor % m0 != 0)
      throw ConfigError("conductor must be divisible by " + std::to_string(m0));
  }

  std::string kind = field_or<std::string>(j, "module_T", "trivial");
  auto tk = tkind_from_name(kind);
  if (!tk) throw ConfigError("unknown module_T kind: " + kind);
  c.tkind = *tk;

  if (j.contains("epsilonC_overrides")) {
    const json& ov = j.at("epsilonC_overrides");
    size_t k = c.quad.q_basis.size();
    std::vector<std::vector<long long>> mat(k, std::vector<long long>(k, 0));
    if (ov.is_string() && ov.get<std::string>() == "sign_cocycle") {
      try {
        mat = eps_star_overrides(Quadruple(c.quad));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("cannot build the sign cocycle: ") +
                          e.what());
      }
    } else {
      for (const auto& e : ov) {
        long long u = field<long long>(e, "u"), v = field<long long>(e, "v");
        if (u < 0 || v < 0 || u >= static_cast<long long>(k) ||
            v >= static_cast<long long>(k))
          throw ConfigError("epsilonC override index out of range");
        mat[u][v] = field<long long>(e, "omega0_power");
      }
    }
    c.epsC_overrides = mat;
  }
  if (j.contains("eta_overrides"))
    c.eta_overrides = field<std::vector<long long>>(j, "eta_overrides");

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    c.sweep.mode_window = field_or<long long>(s, "mode_window", 2);
    c.sweep.exponent_window = field_or<int>(s, "exponent_window", 1);
    c.sweep.max_degree = field_or<int>(s, "max_degree", 3);
    c.sweep.samples = field_or<int>(s, "samples", 50);
    c.sweep.seed = field_or<uint64_t>(s, "seed", 1);
  }
  if (j.contains("realization")) {
    c.realization = field<std::string>(j, "realization");
    c.realization_N = field_or<int>(j, "realization_N", 2);
  }

  // lattice assumption failures are reported by `check`, not rejected here
  return c;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

json Config::to_json() const {
  json q;
  q["N"] = quad.N;
  q["Q_basis"] = quad.q_basis;
  std::vector<int> sigma1;
  for (int x : quad.sigma) sigma1.push_back(x + 1);
  q["sigma"] = sigma1;
  q["iota"] = quad.iota;
  q["m"] = quad.m;
  q["gamma_rank"] = quad.gamma_rank;
  q["conductor"] = quad.conductor;
  json j;
  j["quadruple"] = q;
  j["module_T"] = tkind_name(tkind);
  if (epsC_overrides) {
    json ov = json::array();
    for (size_t u = 0; u < epsC_overrides->size(); ++u)
      for (size_t v = 0; v < (*epsC_overrides)[u].size(); ++v)
        if ((*epsC_overrides)[u][v] != 0)
          ov.push_back({{"u", u}, {"v", v}, {"omega0_power", (*epsC_overrides)[u][v]}});
    j["epsilonC_overrides"] = ov;
  }
  if (eta_overrides) j["eta_overrides"] = *eta_overrides;
  json s;
  s["mode_window"] = sweep.mode_window;
  s["exponent_window"] = sweep.exponent_window;
  s["max_degree"] = sweep.max_degree;
  s["samples"] = sweep.samples;
  s["seed"] = sweep.seed;
  j["sweep"] = s;
  if (realization) {
    j["realization"] = *realization;
    j["realization_N"] = realization_N;
  }
  return j;
}

ModelOptions Config::model_options() const {
  ModelOptions o;
  o.tkind = tkind;
  o.epsC_overrides = epsC_overrides;
  o.eta_overrides = eta_overrides;
  return o;
}

}  // namespace tglie
