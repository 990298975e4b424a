#include "groupmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tglie {

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace

namespace {
bool lift_scalar_condition_holds(const Quadruple& quad, const CocycleTable& epsC,
                                 const TModule& T, const EtaTable& eta,
                                 int label_window);
}

EtaTable::EtaTable(QuadruplePtr quad, const CocycleTable* epsC,
                   const std::optional<std::vector<long long>>& overrides,
                   const TModule* compat)
    : quad_(std::move(quad)), epsC_(epsC) {
  const size_t k = quad_->q_basis().size();
  const int m0 = quad_->m0();
  // g(alpha, beta) = epsC(nu a, nu b) / epsC(a, b): symmetric bimultiplicative
  gmat_.assign(k, std::vector<long long>(k, 0));
  for (size_t u = 0; u < k; ++u)
    for (size_t v = 0; v < k; ++v) {
      long long e = epsC_->epsC_exp(quad_->nu(quad_->q_basis()[u], 1),
                                    quad_->nu(quad_->q_basis()[v], 1)) -
                    epsC_->epsC_exp(quad_->q_basis()[u], quad_->q_basis()[v]);
      gmat_[u][v] = ((e % m0) + m0) % m0;
    }

  if (overrides) {
    if (overrides->size() != k)
      throw std::invalid_argument("eta override has wrong length");
    h_.assign(k, 0);
    for (size_t u = 0; u < k; ++u) h_[u] = (((*overrides)[u] % m0) + m0) % m0;
    if (!lift_order_ok())
      throw std::invalid_argument("eta override does not give a finite-order lift");
    return;
  }

  // search over m0-th roots of unity per basis generator, all-ones first;
  // the module scalar condition breaks ties among finite-order lifts
  h_.assign(k, 0);
  if (k == 0) return;
  std::optional<std::vector<long long>> first_order_valid;
  std::vector<long long> cur(k, 0);
  while (true) {
    h_ = cur;
    if (lift_order_ok()) {
      if (compat == nullptr ||
          lift_scalar_condition_holds(*quad_, *epsC_, *compat, *this, 1))
        return;
      if (!first_order_valid) first_order_valid = cur;
    }
    size_t pos = 0;
    while (pos < k) {
      if (++cur[pos] < m0) break;
      cur[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  if (first_order_valid) {
    h_ = *first_order_valid;
    return;
  }
  throw std::invalid_argument("no finite-order group-algebra lift exists");
}

bool EtaTable::lift_order_ok() const {
  for (const auto& b : quad_->q_basis())
    if (eta_exp(quad_->m(), b) % quad_->m0() != 0) return false;
  return true;
}

long long EtaTable::eta1_exp(const IntVec& alpha) const {
  auto xs = quad_->q_coords(alpha);
  if (!xs) throw std::domain_error("eta argument outside Q");
  const int m0 = quad_->m0();
  long long e = 0;
  for (size_t u = 0; u < xs->size(); ++u) {
    e += h_[u] * (*xs)[u];
    e += gmat_[u][u] * binom2((*xs)[u]);
    for (size_t v = u + 1; v < xs->size(); ++v)
      e += gmat_[u][v] * (*xs)[u] * (*xs)[v];
  }
  return ((e % m0) + m0) % m0;
}

long long EtaTable::eta_exp(int r, const IntVec& alpha) const {
  const int m0 = quad_->m0();
  int rr = ((r % quad_->m()) + quad_->m()) % quad_->m();
  long long e = 0;
  IntVec x = alpha;
  for (int t = 0; t < rr; ++t) {
    e += eta1_exp(x);
    x = quad_->nu(x, 1);
  }
  return ((e % m0) + m0) % m0;
}

Cyclotomic EtaTable::eta(int r, const IntVec& alpha) const {
  return quad_->omega0_pow(eta_exp(r, alpha));
}

std::string tkind_name(TKind k) {
  switch (k) {
    case TKind::GroupAlgebraQ: return "group_algebra_Q";
    case TKind::QuotientP2P: return "quotient_P_mod_2P";
    case TKind::QuotientP2ZeN: return "quotient_P_mod_2Z_eN";
    case TKind::Trivial: return "trivial";
  }
  return "?";
}

std::optional<TKind> tkind_from_name(const std::string& s) {
  for (TKind k : {TKind::GroupAlgebraQ, TKind::QuotientP2P, TKind::QuotientP2ZeN,
                  TKind::Trivial})
    if (tkind_name(k) == s) return k;
  return std::nullopt;
}

TModule::TModule(TKind kind, QuadruplePtr quad, const CocycleTable* epsC)
    : kind_(kind), quad_(std::move(quad)), epsC_(epsC) {
  if (kind_ == TKind::QuotientP2P || kind_ == TKind::QuotientP2ZeN) {
    // the quotient actions use the sign cocycle on P; the lattice table must
    // agree with it on the Q-basis, otherwise the action is ill-defined
    const auto& B = quad_->q_basis();
    for (size_t u = 0; u < B.size(); ++u)
      for (size_t v = 0; v < B.size(); ++v) {
        long long e = epsC_->basis_exps()[u][v];
        int sign = e == 0 ? 1 : (2 * e == quad_->m0() ? -1 : 0);
        if (sign == 0 || sign != eps_star_sign(B[u], B[v]))
          throw std::invalid_argument(
              "quotient modules require the sign cocycle as epsilon_C");
      }
  }
}

IntVec TModule::canonical_label(const IntVec& raw) const {
  switch (kind_) {
    case TKind::Trivial:
      return IntVec(static_cast<size_t>(quad_->N()), 0);
    case TKind::GroupAlgebraQ:
      if (!quad_->in_Q(raw))
        throw std::domain_error("group-algebra label outside Q");
      return raw;
    case TKind::QuotientP2P: {
      IntVec r(raw);
      for (auto& x : r) x = ((x % 2) + 2) % 2;
      return r;
    }
    case TKind::QuotientP2ZeN: {
      IntVec r(raw);
      auto& last = r[r.size() - 1];
      last = ((last % 2) + 2) % 2;
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

IntVec TModule::vacuum_label() const {
  return canonical_label(IntVec(static_cast<size_t>(quad_->N()), 0));
}

std::pair<Cyclotomic, IntVec> TModule::act(const IntVec& alpha,
                                           const IntVec& label) const {
  const CycloFieldPtr& C = quad_->field()->cyclo;
  switch (kind_) {
    case TKind::Trivial:
      return {Cyclotomic::one(C), label};
    case TKind::GroupAlgebraQ:
      return {epsC_->epsC(alpha, label), canonical_label(vec_add(alpha, label))};
    case TKind::QuotientP2P:
    case TKind::QuotientP2ZeN: {
      int s = eps_star_sign(alpha, label);
      Cyclotomic c = Cyclotomic::one(C);
      if (s < 0) c = -c;
      return {c, canonical_label(vec_add(alpha, label))};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<IntVec> TModule::labels(int window) const {
  std::vector<IntVec> out;
  const int N = quad_->N();
  switch (kind_) {
    case TKind::Trivial:
      out.push_back(vacuum_label());
      break;
    case TKind::GroupAlgebraQ: {
      // integer combinations of the basis with coefficients in [-window, window]
      const auto& B = quad_->q_basis();
      std::vector<int> c(B.size(), -window);
      if (B.empty()) {
        out.push_back(IntVec(static_cast<size_t>(N), 0));
        break;
      }
      while (true) {
        IntVec v(static_cast<size_t>(N), 0);
        for (size_t u = 0; u < B.size(); ++u)
          for (int i = 0; i < N; ++i) v[i] += c[u] * B[u][i];
        out.push_back(v);
        size_t pos = 0;
        while (pos < c.size()) {
          if (++c[pos] <= window) break;
          c[pos] = -window;
          ++pos;
        }
        if (pos == c.size()) break;
      }
      break;
    }
    case TKind::QuotientP2P: {
      for (long long mask = 0; mask < (1LL << N); ++mask) {
        IntVec v(static_cast<size_t>(N), 0);
        for (int i = 0; i < N; ++i) v[i] = (mask >> i) & 1;
        out.push_back(v);
      }
      break;
    }
    case TKind::QuotientP2ZeN: {
      // free coordinates in [-window, window], last coordinate mod 2
      std::vector<int> c(static_cast<size_t>(N - 1), -window);
      while (true) {
        for (int last = 0; last < 2; ++last) {
          IntVec v(static_cast<size_t>(N), 0);
          for (int i = 0; i + 1 < N; ++i) v[i] = c[i];
          v[N - 1] = last;
          out.push_back(v);
        }
        size_t pos = 0;
        while (pos < c.size()) {
          if (++c[pos] <= window) break;
          c[pos] = -window;
          ++pos;
        }
        if (pos == c.size() || c.empty()) break;
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CompatibilityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.pass; });
}

std::string CompatibilityReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.id << ": " << (e.pass ? "pass" : "FAIL");
    if (!e.witness.empty()) os << " (" << e.witness << ")";
    os << "\n";
  }
  return os.str();
}

CompatibilityReport check_compatibility(const Quadruple& quad,
                                        const CocycleTable& epsC,
                                        const TModule& T, const EtaTable& eta,
                                        int label_window) {
  CompatibilityReport rep;
  auto labels = T.labels(label_window);
  const int m = quad.m();

  // condition 1: the label shifted by alpha has the weight functional of
  // beta + alpha; with canonical representatives this says the two
  // representatives pair equally against every invariant vector
  {
    bool pass = true;
    std::string witness;
    for (const auto& alpha : quad.q_basis()) {
      for (const auto& label : labels) {
        auto [factor, nl] = T.act(alpha, label);
        (void)factor;
        IntVec expect = vec_add(alpha, T.weight_rep(label));
        const IntVec& got = T.weight_rep(nl);
        bool ok = true;
        for (int i = 0; i < quad.N() && ok; ++i) {
          IntVec ei(static_cast<size_t>(quad.N()), 0);
          ei[i] = 1;
          IntVec s = quad.nu_orbit_sum(ei);
          if (dot(s, expect) != dot(s, got)) ok = false;
        }
        if (!ok) {
          pass = false;
          witness = "shift by " + std::to_string(alpha[0]) + "...";
          break;
        }
      }
      if (!pass) break;
    }
    rep.entries.push_back({"weight-shift", pass, witness});
  }

  // condition 2: e_alpha^{-1} lift(e_alpha) acts on a label of weight beta by
  // omega^{-<S(alpha), beta + alpha/2>}
  {
    bool pass = lift_scalar_condition_holds(quad, epsC, T, eta, label_window);
    rep.entries.push_back({"lift-scalar", pass, pass ? "" : "lift scalar mismatch"});
  }
  (void)m;
  return rep;
}

namespace {

bool lift_scalar_condition_holds(const Quadruple& quad, const CocycleTable& epsC,
                                 const TModule& T, const EtaTable& eta,
                                 int label_window) {
  auto labels = T.labels(label_window);
  for (const auto& alpha : quad.q_basis()) {
    IntVec nual = quad.nu(alpha, 1);
    for (const auto& label : labels) {
      // operator: eta(1,alpha) epsC(alpha,-alpha)^{-1} e_{-alpha} e_{nu alpha}
      auto [f1, l1] = T.act(nual, label);
      auto [f2, l2] = T.act(vec_neg(alpha), l1);
      if (l2 != label) return false;
      Cyclotomic lhs = quad.omega0_pow(eta.eta1_exp(alpha) -
                                       epsC.epsC_exp(alpha, vec_neg(alpha))) *
                       f1 * f2;
      IntVec s = quad.nu_orbit_sum(alpha);
      long long twice = 2 * dot(s, T.weight_rep(label)) + dot(s, alpha);
      if (twice % 2 != 0) return false;
      Cyclotomic rhs = quad.omega_pow(-twice / 2);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

FockVector act_group(const TModule& T, const IntVec& beta, const FockVector& v) {
  FockVector out;
  for (const auto& [k, c] : v.terms()) {
    auto [factor, nl] = T.act(beta, k.label);
    FockKey nk = k;
    nk.label = nl;
    out.add_term(nk, c * Scalar::from_cyclo(c.field(), factor));
  }
  return out;
}

FockVector act_zero_mode(const Quadruple& quad, const TModule& T,
                         const IntVec& gamma, const FockVector& v) {
  FockVector out;
  const KFieldPtr& K = quad.field();
  IntVec s = quad.nu_orbit_sum(gamma);
  for (const auto& [k, c] : v.terms()) {
    long long num = dot(s, T.weight_rep(k.label));
    Scalar w = Scalar::from_rat(
        K, Rat(static_cast<long>(num), static_cast<unsigned long>(quad.m())));
    out.add_term(k, c * w);
  }
  return out;
}

std::map<long long, FockVector> act_z_power(const Quadruple& quad,
                                            const TModule& T,
                                            const IntVec& sum_vec,
                                            const FockVector& v) {
  std::map<long long, FockVector> out;
  (void)quad;
  for (const auto& [k, c] : v.terms()) {
    long long e = dot(sum_vec, T.weight_rep(k.label));
    out[e].add_term(k, c);
  }
  return out;
}

FockVector act_c_power(const Quadruple& quad, const TModule& T, const ExpVec& c,
                       const IntVec& sum_vec, long long twice_extra,
                       const FockVector& v) {
  FockVector out;
  const KFieldPtr& K = quad.field();
  for (const auto& [k, coeff] : v.terms()) {
    long long twice_e = 2 * dot(sum_vec, T.weight_rep(k.label)) + twice_extra;
    Scalar w = Scalar::q_power_half(K, c, twice_e);
    out.add_term(k, coeff * w);
  }
  return out;
}

}  // namespace tglie
