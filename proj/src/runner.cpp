#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <random>
#include <set>
#include <sstream>

namespace tglie {

using nlohmann::json;

void Report::add(const std::string& id, bool pass, json witness) {
  records.push_back({id, pass ? CheckRecord::Pass : CheckRecord::Fail,
                     std::move(witness)});
}

void Report::add_vacuous(const std::string& id, json witness) {
  records.push_back({id, CheckRecord::Vacuous, std::move(witness)});
}

void Report::merge(const Report& o) {
  records.insert(records.end(), o.records.begin(), o.records.end());
}

bool Report::ok() const { return fails() == 0; }

int Report::fails() const {
  int n = 0;
  for (const auto& r : records)
    if (r.status == CheckRecord::Fail) ++n;
  return n;
}

json Report::to_json() const {
  std::vector<CheckRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.id < b.id;
                   });
  json recs = json::array();
  int pass = 0, fail = 0, vac = 0;
  for (const auto& r : sorted) {
    json e;
    e["id"] = r.id;
    e["status"] = r.status == CheckRecord::Pass     ? "pass"
                  : r.status == CheckRecord::Fail   ? "fail"
                                                    : "vacuous";
    if (!r.witness.is_null()) e["witness"] = r.witness;
    recs.push_back(e);
    (r.status == CheckRecord::Pass   ? pass
     : r.status == CheckRecord::Fail ? fail
                                     : vac)++;
  }
  json out;
  out["command"] = command;
  out["seed"] = seed;
  out["records"] = recs;
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"vacuous", vac}};
  return out;
}

std::string Report::summary_line() const {
  int pass = 0, fail = 0, vac = 0;
  for (const auto& r : records)
    (r.status == CheckRecord::Pass   ? pass
     : r.status == CheckRecord::Fail ? fail
                                     : vac)++;
  std::ostringstream os;
  os << command << ": " << pass << " pass, " << fail << " fail, " << vac
     << " vacuous";
  return os.str();
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) {
    std::string key;
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(e[i]);
    }
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(r.get_str());
    out[key] = coeffs;
  }
  return out;
}

json scalar_to_json(const Scalar& s) {
  return {{"num", laurent_to_json(s.num())}, {"den", laurent_to_json(s.den())}};
}

json genkey_to_json(const GenKey& k) {
  return {{"rho_i", k.j.a.sgn}, {"i", k.j.a.idx + 1},
          {"rho_j", k.j.b.sgn}, {"j", k.j.b.idx + 1},
          {"c", k.c},           {"n", k.n}};
}

json fock_to_json(const FockVector& v) {
  json out = json::object();
  for (const auto& [k, c] : v.terms()) out[k.to_string()] = scalar_to_json(c);
  return out;
}

namespace {

std::vector<CheckRecord> run_tasks(
    std::vector<std::function<CheckRecord()>> tasks, int jobs) {
  std::vector<CheckRecord> out(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      out[i] = tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

IntVec random_q_vec(const Quadruple& q, std::mt19937_64& rng, int window = 2) {
  std::uniform_int_distribution<int> d(-window, window);
  IntVec v(static_cast<size_t>(q.N()), 0);
  for (const auto& b : q.q_basis()) {
    int k = d(rng);
    for (size_t i = 0; i < v.size(); ++i) v[i] += k * b[i];
  }
  return v;
}

std::vector<GenKey> canonical_key_window(const Model& M, int exp_window,
                                         long long mode_window) {
  std::set<GenKey> keys;
  auto J = M.quad->enumerate_J();
  const int l = M.quad->gamma_rank();
  std::vector<ExpVec> cs{exp_zero(l)};
  for (int var = 0; var < l; ++var) {
    std::vector<ExpVec> next;
    for (const auto& c : cs)
      for (int x = -exp_window; x <= exp_window; ++x) {
        ExpVec cc = c;
        cc[var] = x;
        next.push_back(cc);
      }
    cs = std::move(next);
  }
  for (const auto& j : J)
    for (const auto& c : cs)
      for (long long n = -mode_window; n <= mode_window; ++n) {
        GenCanon g = canonicalize_generator(M, GenKey{j, c, n});
        if (!g.zero) keys.insert(g.key);
      }
  return {keys.begin(), keys.end()};
}

uint64_t effective_seed(const Config& cfg, const RunFlags& flags) {
  return flags.seed ? *flags.seed : cfg.sweep.seed;
}

}  // namespace

Report run_check(const Config& cfg, const RunFlags& flags) {
  Report rep;
  rep.command = "check";
  rep.seed = effective_seed(cfg, flags);

  AssumptionReport arep = check_assumptions(cfg.quad);
  for (const auto& e : arep.entries)
    rep.add("assumptions/" + e.id, e.pass,
            e.witness.empty() ? json(nullptr) : json(e.witness));
  if (!arep.all_pass()) return rep;

  Model M = build_model(cfg.quad, cfg.model_options());
  const Quadruple& q = *M.quad;
  std::mt19937_64 rng(rep.seed);

  // cocycle suite
  {
    bool alt = true;
    const auto& B = q.q_basis();
    for (size_t u = 0; u < B.size() && alt; ++u)
      for (size_t v = 0; v < B.size() && alt; ++v) {
        long long d = M.epsC->epsC_exp(B[u], B[v]) - M.epsC->epsC_exp(B[v], B[u]);
        long long c = q.commutator_exp(B[u], B[v]);
        alt = ((d - c) % q.m0() + q.m0()) % q.m0() == 0;
      }
    rep.add("cocycle/alternation-basis", alt);

    bool coc = true, diag = true, epsalt = true;
    for (int t = 0; t < 200; ++t) {
      IntVec a = random_q_vec(q, rng), b = random_q_vec(q, rng),
             c = random_q_vec(q, rng);
      if (!(M.epsC->epsC(a, b) * M.epsC->epsC(vec_add(a, b), c) ==
            M.epsC->epsC(b, c) * M.epsC->epsC(a, vec_add(b, c))))
        coc = false;
      if (!q.commutator_C(a, a).is_one()) diag = false;
      long long d = M.epsC->eps_exp(a, b) - M.epsC->eps_exp(b, a);
      long long want = ((dot(a, b) % 2) + 2) % 2 == 0 ? 0 : q.m0() / 2;
      if (((d - want) % q.m0() + q.m0()) % q.m0() != 0) epsalt = false;
    }
    rep.add("cocycle/two-cocycle-identity", coc);
    rep.add("cocycle/commutator-diagonal", diag);
    rep.add("cocycle/eps-alternation", epsalt);
  }

  // lift properties
  {
    bool autq = true, order = true;
    for (int t = 0; t < 100; ++t) {
      IntVec a = random_q_vec(q, rng), b = random_q_vec(q, rng);
      long long lhs = M.eta->eta1_exp(vec_add(a, b)) + M.epsC->epsC_exp(a, b);
      long long rhs = M.eta->eta1_exp(a) + M.eta->eta1_exp(b) +
                      M.epsC->epsC_exp(q.nu(a, 1), q.nu(b, 1));
      if (((lhs - rhs) % q.m0() + q.m0()) % q.m0() != 0) autq = false;
      if (M.eta->eta_exp(q.m(), a) % q.m0() != 0) order = false;
    }
    rep.add("lift/automorphism-identity", autq);
    rep.add("lift/finite-order", order);
  }

  // module compatibility
  {
    auto crep = check_compatibility(q, *M.epsC, *M.T, *M.eta);
    for (const auto& e : crep.entries)
      rep.add("compatibility/" + e.id, e.pass,
              e.witness.empty() ? json(nullptr) : json(e.witness));
  }

  // span condition, reported relative to the group rank
  {
    SpanCondition sc = span_condition(q);
    rep.add("span/roots", sc.roots_span);
    rep.add("span/unit-pairs", sc.unit_pairs_span);
    rep.add_vacuous("notes/canonical-spanning-set",
                    "linear independence of canonical labels is not assumed; "
                    "structure constants are defined by rewriting");
  }
  return rep;
}

Report run_constants(const Config& cfg, const RunFlags& flags, json* table_out) {
  Report rep;
  rep.command = "constants";
  rep.seed = effective_seed(cfg, flags);
  Model M = build_model(cfg.quad, cfg.model_options());

  long long W = flags.window > 0 ? flags.window : cfg.sweep.mode_window;
  int E = cfg.sweep.exponent_window;
  auto keys = canonical_key_window(M, E, W);
  // outputs can land outside the input window; index every reachable label
  auto all_keys = canonical_key_window(M, 2 * E, 2 * W);
  std::map<GenKey, size_t> index;
  for (size_t i = 0; i < all_keys.size(); ++i) index[all_keys[i]] = i;

  json gens = json::array();
  for (const auto& k : all_keys) gens.push_back(genkey_to_json(k));
  json brackets = json::array();
  bool indexed = true;
  for (size_t a = 0; a < keys.size(); ++a)
    for (size_t b = 0; b < keys.size(); ++b) {
      LieElement br = bracket_pair(M, keys[a], keys[b]);
      json entry;
      entry["gen1"] = index.at(keys[a]);
      entry["gen2"] = index.at(keys[b]);
      json result = json::array();
      for (const auto& [k, v] : br.terms()) {
        auto it = index.find(k);
        if (it == index.end()) {
          indexed = false;
          continue;
        }
        json t;
        t["gen"] = it->second;
        t["num"] = laurent_to_json(v.num());
        t["den"] = laurent_to_json(v.den());
        result.push_back(t);
      }
      entry["result"] = result;
      Scalar cen = br.central().num().field() == nullptr
                       ? Scalar::zero(M.field())
                       : br.central();
      entry["central"] = {{"num", laurent_to_json(cen.num())},
                          {"den", laurent_to_json(cen.den())}};
      brackets.push_back(entry);
    }
  rep.add("constants/window-closed", indexed);
  if (table_out) {
    (*table_out)["generators"] = gens;
    (*table_out)["brackets"] = brackets;
  }
  return rep;
}

Report run_verify_theorem(const Config& cfg, const RunFlags& flags) {
  Report rep;
  rep.command = "verify-theorem";
  rep.seed = effective_seed(cfg, flags);
  Model M = build_model(cfg.quad, cfg.model_options());
  const Quadruple& q = *M.quad;
  const int l = q.gamma_rank();

  long long W = flags.window > 0 ? flags.window : cfg.sweep.mode_window;
  int max_deg = flags.max_degree > 0 ? flags.max_degree : cfg.sweep.max_degree;
  int samples = flags.samples > 0 ? flags.samples : cfg.sweep.samples;
  int E = cfg.sweep.exponent_window;

  auto vectors = sample_fock_vectors(M, rep.seed, 6, max_deg);
  auto J = q.enumerate_J();

  // stratified group-element patterns per classifier case
  auto case_pattern = [&](int cs, std::mt19937_64& rng)
      -> std::optional<std::pair<ExpVec, ExpVec>> {
    ExpVec c1 = exp_zero(l), c2 = exp_zero(l);
    if (l == 0) return cs == 4 ? std::make_optional(std::make_pair(c1, c2))
                               : std::nullopt;
    std::uniform_int_distribution<int> d(1, std::max(1, E));
    std::uniform_int_distribution<int> var(0, l - 1);
    int a = d(rng), b = d(rng);
    switch (cs) {
      case 1:
        if (E < 2 && l < 2) return std::nullopt;
        if (l >= 2) {
          c1[0] = a;
          c2[1] = b;
        } else {
          c1[0] = 1;
          c2[0] = -2;
        }
        return std::make_pair(c1, c2);
      case 2:
        c2[var(rng)] = b;
        return std::make_pair(c1, c2);
      case 3:
        c1[var(rng)] = a;
        return std::make_pair(c1, c2);
      case 4:
        return std::make_pair(c1, c2);
      case 5: {
        int v = var(rng);
        c1[v] = a;
        c2[v] = -a;
        return std::make_pair(c1, c2);
      }
      case 6: {
        int v = var(rng);
        c1[v] = a;
        c2[v] = a;
        return std::make_pair(c1, c2);
      }
      default:
        return std::nullopt;
    }
  };

  int per_case = (samples + 5) / 6;
  std::vector<std::function<CheckRecord()>> tasks;
  std::mt19937_64 seeder(rep.seed);
  for (int cs = 1; cs <= 6; ++cs) {
    std::mt19937_64 rng(seeder());
    bool reachable = case_pattern(cs, rng).has_value();
    if (!reachable) {
      rep.add_vacuous("theorem/case-" + std::to_string(cs),
                      "unreachable at this group rank");
      continue;
    }
    for (int t = 0; t < per_case; ++t) {
      auto pat = case_pattern(cs, rng);
      std::uniform_int_distribution<size_t> pj(0, J.size() - 1);
      std::uniform_int_distribution<long long> pn(-W, W);
      std::uniform_int_distribution<size_t> pv(0, vectors.size() - 1);
      GenKey k1{J[pj(rng)], pat->first, pn(rng)};
      GenKey k2{J[pj(rng)], pat->second, pn(rng)};
      const FockVector& v = vectors[pv(rng)];
      std::string id = "theorem/case-" + std::to_string(cs) + "/sample-" +
                       std::to_string(t);
      const Model* Mp = &M;
      tasks.push_back([Mp, k1, k2, v, id]() -> CheckRecord {
        TheoremCheck chk = verify_theorem(*Mp, k1, k2, v);
        CheckRecord rec;
        rec.id = id;
        rec.status = chk.pass ? CheckRecord::Pass : CheckRecord::Fail;
        if (!chk.pass)
          rec.witness = {{"gen1", genkey_to_json(k1)},
                         {"gen2", genkey_to_json(k2)},
                         {"lhs", fock_to_json(chk.lhs)},
                         {"rhs", fock_to_json(chk.rhs)}};
        return rec;
      });
    }
  }
  // case 7 is unrepresentable by construction
  rep.add_vacuous("theorem/case-7", "equal inverse group elements cannot occur");
  auto results = run_tasks(std::move(tasks), flags.jobs);
  rep.records.insert(rep.records.end(), results.begin(), results.end());
  return rep;
}

Report run_verify_identities(const Config& cfg, const RunFlags& flags) {
  Report rep;
  rep.command = "verify-identities";
  rep.seed = effective_seed(cfg, flags);
  long long D = flags.window > 0 ? flags.window : 8;
  // fresh-symbol budget; the full battery uses four symbols
  int nmax = flags.max_degree > 0 ? std::min(4, flags.max_degree) : 4;

  std::vector<std::function<CheckRecord()>> tasks;
  auto push = [&](const std::string& id, std::function<bool()> f) {
    tasks.push_back([id, f]() -> CheckRecord {
      CheckRecord rec;
      rec.id = id;
      rec.status = f() ? CheckRecord::Pass : CheckRecord::Fail;
      return rec;
    });
  };

  auto profiles = [](int n, std::vector<int> values) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& p : out)
        for (int v : values) {
          auto q = p;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      out = std::move(next);
    }
    return out;
  };
  auto profile_str = [](const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i)
      s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };

  for (int n = 1; n <= nmax; ++n) {
    for (RationalIdentity id :
         {RationalIdentity::PfracSumS, RationalIdentity::PfracSumT,
          RationalIdentity::PfracSquareS, RationalIdentity::PfracSquareT})
      push("identity/" + rational_identity_name(id) + "/n" + std::to_string(n),
           [id, n] { return verify_rational(id, n, {}); });
    for (const auto& p : profiles(n, {1, 2})) {
      std::string suffix = "/n" + std::to_string(n) + profile_str(p);
      push("identity/" + rational_identity_name(RationalIdentity::ProfileProdS) +
               suffix,
           [n, p] { return verify_rational(RationalIdentity::ProfileProdS, n, p); });
      push("identity/" + rational_identity_name(RationalIdentity::ProfileProdT) +
               suffix,
           [n, p] { return verify_rational(RationalIdentity::ProfileProdT, n, p); });
      // the power-series forms grow quickly with the symbol count; three
      // symbols already exercise every mixed profile shape
      if (n <= 3) {
        push("identity/" + series_identity_name(SeriesIdentity::ProfileSeriesZ) +
                 suffix,
             [n, p, D] {
               return verify_series(SeriesIdentity::ProfileSeriesZ, n, p, D);
             });
        push("identity/" + series_identity_name(SeriesIdentity::ProfileSeriesTZ) +
                 suffix,
             [n, p, D] {
               return verify_series(SeriesIdentity::ProfileSeriesTZ, n, p, D);
             });
        push("identity/" + series_identity_name(SeriesIdentity::DeltaSplit) +
                 suffix,
             [n, p, D] {
               return verify_series(SeriesIdentity::DeltaSplit, n, p, D);
             });
      }
    }
    for (const auto& p : profiles(n, {-2, -1, 0, 1, 2}))
      push("identity/" +
               series_identity_name(SeriesIdentity::LaurentReflection) + "/n" +
               std::to_string(n) + profile_str(p),
           [n, p, D] {
             return verify_series(SeriesIdentity::LaurentReflection, n, p, D);
           });
  }
  uint64_t seed = rep.seed;
  push("identity/delta-eval/random20",
       [D, seed] { return verify_series_random(SeriesIdentity::DeltaEval, D, seed, 20); });
  push("identity/ddelta-eval/random20", [D, seed] {
    return verify_series_random(SeriesIdentity::DDeltaEval, D, seed + 1, 20);
  });
  push("identity/bivar-delta-eval/random20", [D, seed] {
    return verify_series_random(SeriesIdentity::BivarDeltaEval, 4, seed + 2, 20);
  });
  push("identity/bivar-ddelta-eval/random20", [D, seed] {
    return verify_series_random(SeriesIdentity::BivarDDeltaEval, 4, seed + 3, 20);
  });

  auto results = run_tasks(std::move(tasks), flags.jobs);
  rep.records.insert(rep.records.end(), results.begin(), results.end());

  // normalization-constant products over the configured quadruple
  if (check_assumptions(cfg.quad).all_pass()) {
    Model M = build_model(cfg.quad, cfg.model_options());
    bool ok = true;
    const auto& B = M.quad->q_basis();
    for (const auto& a : B)
      for (const auto& b : B)
        for (int r = 0; r < M.quad->m(); ++r)
          if (!norm_constant_product_holds(M, a, b, r)) ok = false;
    rep.add("identity/norm-constant-product", ok);

    // root-of-unity specialization and the orbit weight-sum side identity
    bool spec_ok = true;
    bool any_spec = false;
    int side_checked = 0, side_ok = 0;
    std::mt19937_64 rng(rep.seed + 7);
    for (int t = 0; t < 10; ++t) {
      IntVec a = random_q_vec(*M.quad, rng, 1);
      IntVec b = random_q_vec(*M.quad, rng, 1);
      bool in_range = true;
      for (int p = 1; p <= M.quad->m(); ++p)
        if (dot(M.quad->nu(a, p), b) < -2) in_range = false;
      if (in_range && M.quad->m() >= 2) {
        any_spec = true;
        if (!verify_reflection_specialization(M, a, b, 6)) spec_ok = false;
      }
      auto side = verify_orbit_weight_sum(M, a, b);
      if (side.has_value()) {
        ++side_checked;
        if (*side) ++side_ok;
      }
    }
    if (any_spec)
      rep.add("identity/reflection-root-specialization", spec_ok);
    else
      rep.add_vacuous("identity/reflection-root-specialization",
                      "no in-range samples at this order");
    if (side_checked > 0)
      rep.add("identity/orbit-weight-sum", side_ok == side_checked);
    else
      rep.add_vacuous("identity/orbit-weight-sum",
                      "no orbit shift pairs to -2 on the samples");
  }
  return rep;
}

Report run_realization(const Config& cfg, const std::string& name, int N,
                       const RunFlags& flags) {
  Report rep;
  rep.command = "realization";
  rep.seed = effective_seed(cfg, flags);
  RealizationSweep sweep;
  sweep.mode_window = flags.window > 0 ? flags.window : cfg.sweep.mode_window;
  sweep.exp_window = cfg.sweep.exponent_window;
  sweep.max_degree = flags.max_degree > 0 ? flags.max_degree : cfg.sweep.max_degree;
  sweep.samples = flags.samples > 0 ? flags.samples : cfg.sweep.samples;
  sweep.seed = rep.seed;
  for (const auto& rec : verify_realization(name, N, sweep)) {
    if (rec.status == 2)
      rep.add_vacuous("realization/" + rec.id,
                      rec.witness.empty() ? json(nullptr) : json(rec.witness));
    else
      rep.add("realization/" + rec.id, rec.status == 0,
              rec.witness.empty() ? json(nullptr) : json(rec.witness));
  }
  return rep;
}

Report run_all(const Config& cfg, const RunFlags& flags) {
  Report rep;
  rep.command = "all";
  rep.seed = effective_seed(cfg, flags);
  rep.merge(run_check(cfg, flags));
  rep.merge(run_verify_theorem(cfg, flags));
  rep.merge(run_verify_identities(cfg, flags));
  if (cfg.realization)
    rep.merge(run_realization(cfg, *cfg.realization, cfg.realization_N, flags));
  return rep;
}

}  // namespace tglie
