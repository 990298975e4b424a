#include "fock.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tglie {

int HeisenbergBasis::mod(long long r) const {
  int m = quad_->m();
  return static_cast<int>(((r % m) + m) % m);
}

HeisenbergBasis::HeisenbergBasis(QuadruplePtr quad) : quad_(std::move(quad)) {
  const int N = quad_->N();
  const int m = quad_->m();
  rep_of_letter_.assign(static_cast<size_t>(N), -1);
  // sigma-orbits, representative = smallest letter
  for (int i = 0; i < N; ++i) {
    if (rep_of_letter_[i] >= 0) continue;
    std::vector<int> letters, signs;
    int cur = i, sgn = 1;
    do {
      rep_of_letter_[cur] = i;
      letters.push_back(cur);
      signs.push_back(sgn);
      sgn *= quad_->iota()[cur];
      cur = quad_->sigma()[cur];
    } while (cur != i);
    orbit_reps_.push_back(i);
    orbit_of_rep_.push_back(std::move(letters));
    orbit_signs_.push_back(std::move(signs));
  }
  const CycloFieldPtr& C = quad_->field()->cyclo;
  per_res_.assign(static_cast<size_t>(m), {});
  Rat inv_m(1, static_cast<unsigned long>(m));
  for (int res = 0; res < m; ++res) {
    for (int rep : orbit_reps_) {
      std::vector<Cyclotomic> v(static_cast<size_t>(N), Cyclotomic::zero(C));
      IntVec e(static_cast<size_t>(N), 0);
      e[rep] = 1;
      IntVec x = e;
      for (int p = 0; p < m; ++p) {
        Cyclotomic w = quad_->omega_pow(-static_cast<long long>(res) * p);
        for (int i = 0; i < N; ++i)
          if (x[i] != 0)
            v[i] = v[i] + w * Cyclotomic::from_rat(C, Rat(static_cast<long>(x[i])) *
                                                          inv_m);
        x = quad_->nu(x, 1);
      }
      bool zero = std::all_of(v.begin(), v.end(),
                              [](const Cyclotomic& c) { return c.is_zero(); });
      if (!zero) per_res_[res].push_back({rep, std::move(v)});
    }
  }
}

int HeisenbergBasis::dim(long long residue) const {
  return static_cast<int>(per_res_[mod(residue)].size());
}

const std::vector<HeisenbergBasis::Elem>& HeisenbergBasis::basis(
    long long residue) const {
  return per_res_[mod(residue)];
}

const HeisenbergBasis::Elem* HeisenbergBasis::lookup(int rep,
                                                     long long residue) const {
  for (const auto& e : per_res_[mod(residue)])
    if (e.rep == rep) return &e;
  return nullptr;
}

std::vector<std::pair<int, Cyclotomic>> HeisenbergBasis::decompose(
    const IntVec& alpha, long long residue) const {
  // alpha_{(res)} = sum over orbits of (sum_t alpha[sigma^t(i)] sign_t(i)
  // omega^{res t}) eps_{i,(res)}
  std::vector<std::pair<int, Cyclotomic>> out;
  const CycloFieldPtr& C = quad_->field()->cyclo;
  for (size_t o = 0; o < orbit_reps_.size(); ++o) {
    int rep = orbit_reps_[o];
    if (lookup(rep, residue) == nullptr) continue;
    Cyclotomic coeff = Cyclotomic::zero(C);
    for (size_t t = 0; t < orbit_of_rep_[o].size(); ++t) {
      long long a = alpha[orbit_of_rep_[o][t]];
      if (a == 0) continue;
      Cyclotomic w = quad_->omega_pow(residue * static_cast<long long>(t));
      if (orbit_signs_[o][t] < 0) w = -w;
      coeff = coeff + w * Cyclotomic::from_rat(C, Rat(static_cast<long>(a)));
    }
    if (!coeff.is_zero()) out.emplace_back(rep, coeff);
  }
  return out;
}

Cyclotomic HeisenbergBasis::pairing(const std::vector<Cyclotomic>& x,
                                    const std::vector<Cyclotomic>& y) const {
  Cyclotomic acc = Cyclotomic::zero(quad_->field()->cyclo);
  for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
  return acc;
}

long long FockKey::degree() const {
  long long d = 0;
  for (const auto& [rep, n] : mono) d += -n;
  return d;
}

std::string FockKey::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < label.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(label[i]);
  }
  s += "]";
  for (const auto& [rep, n] : mono)
    s += " a" + std::to_string(rep + 1) + "(" + std::to_string(n) + ")";
  return s;
}

FockVector FockVector::basis(const FockKey& k, const Scalar& coeff) {
  FockVector v;
  v.add_term(k, coeff);
  return v;
}

long long FockVector::degree() const {
  long long d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.degree());
  return d;
}

void FockVector::add_term(const FockKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r(*this);
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r(*this);
  for (const auto& [k, c] : o.t_) r.add_term(k, -c);
  return r;
}

FockVector FockVector::scaled(const Scalar& c) const {
  FockVector r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) {
    Scalar w = v * c;
    if (!w.is_zero()) r.t_.emplace(k, w);
  }
  return r;
}

bool FockVector::operator==(const FockVector& o) const {
  FockVector d = *this - o;
  return d.is_zero();
}

std::string FockVector::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) s += "  +  ";
    s += c.to_string() + " * " + k.to_string();
    first = false;
  }
  return s;
}

namespace {

FockVector create_one(const HeisenbergBasis& hb, int rep, long long n,
                      const Scalar& coeff, const FockVector& v) {
  FockVector out;
  if (hb.lookup(rep, n) == nullptr) return out;  // vanishing projection
  for (const auto& [k, c] : v.terms()) {
    FockKey nk = k;
    auto pos = std::lower_bound(nk.mono.begin(), nk.mono.end(),
                                std::make_pair(rep, n));
    nk.mono.insert(pos, {rep, n});
    out.add_term(nk, c * coeff);
  }
  return out;
}

FockVector annihilate_vec(const HeisenbergBasis& hb,
                          const std::vector<Cyclotomic>& xvec, long long n,
                          const Scalar& coeff, const FockVector& v) {
  // [x(n), y(-n)] = m^{-1} <x, y> n
  FockVector out;
  const auto& quad = *hb.quad();
  const KFieldPtr& K = quad.field();
  Rat factor = Rat(static_cast<long>(n), static_cast<unsigned long>(quad.m()));
  for (const auto& [k, c] : v.terms()) {
    for (size_t idx = 0; idx < k.mono.size(); ++idx) {
      if (idx > 0 && k.mono[idx] == k.mono[idx - 1]) continue;  // same slot once
      auto [rep, mode] = k.mono[idx];
      if (mode != -n) continue;
      const auto* elem = hb.lookup(rep, mode);
      assert(elem != nullptr);
      Cyclotomic pair = hb.pairing(xvec, elem->vec);
      if (pair.is_zero()) continue;
      long long mult = static_cast<long long>(
          std::count(k.mono.begin(), k.mono.end(), k.mono[idx]));
      FockKey nk = k;
      nk.mono.erase(nk.mono.begin() + static_cast<long>(idx));
      Scalar s = c * coeff *
                 Scalar::from_cyclo(
                     K, pair * Cyclotomic::from_rat(
                                   K->cyclo, factor * Rat(static_cast<long>(mult))));
      out.add_term(nk, s);
    }
  }
  return out;
}

}  // namespace

FockVector heisenberg_apply(const HeisenbergBasis& hb, int rep, long long n,
                            const FockVector& v) {
  if (n == 0) throw std::invalid_argument("heisenberg_apply: zero mode");
  const KFieldPtr& K = hb.quad()->field();
  if (n < 0) return create_one(hb, rep, n, Scalar::one(K), v);
  const auto* elem = hb.lookup(rep, n);
  if (elem == nullptr) return {};
  return annihilate_vec(hb, elem->vec, n, Scalar::one(K), v);
}

FockVector current_apply(const HeisenbergBasis& hb, const IntVec& alpha,
                         long long n, const FockVector& v) {
  if (n == 0) throw std::invalid_argument("current_apply: zero mode");
  const KFieldPtr& K = hb.quad()->field();
  FockVector out;
  if (n < 0) {
    for (const auto& [rep, coeff] : hb.decompose(alpha, n))
      out = out + create_one(hb, rep, n, Scalar::from_cyclo(K, coeff), v);
  } else {
    // assemble the projection vector of alpha at residue n
    const CycloFieldPtr& C = K->cyclo;
    std::vector<Cyclotomic> xvec(static_cast<size_t>(hb.quad()->N()),
                                 Cyclotomic::zero(C));
    for (const auto& [rep, coeff] : hb.decompose(alpha, n)) {
      const auto* elem = hb.lookup(rep, n);
      for (size_t i = 0; i < xvec.size(); ++i)
        xvec[i] = xvec[i] + coeff * elem->vec[i];
    }
    out = annihilate_vec(hb, xvec, n, Scalar::one(K), v);
  }
  return out;
}

std::vector<FockVector> eplus_expand(const HeisenbergBasis& hb,
                                     const std::vector<EOperand>& ops,
                                     const FockVector& v) {
  // exp(sum_{d>=1} A_d z^{-d}) v with A_d = -(m/d) u_d(d),
  // u_d = sum_ops scale^{-d} alpha_{(d)}
  const auto& quad = *hb.quad();
  const KFieldPtr& K = quad.field();
  long long dmax = v.degree();
  std::vector<FockVector> w(static_cast<size_t>(dmax) + 1);
  w[0] = v;
  // precompute scaled annihilation data per d
  for (long long e = 1; e <= dmax; ++e) {
    FockVector acc;
    for (long long d = 1; d <= e; ++d) {
      if (w[e - d].is_zero()) continue;
      // A_d applied to w[e-d]
      FockVector term;
      for (const auto& op : ops) {
        Scalar scale = op.scale_qexp.empty()
                           ? Scalar::one(K)
                           : Scalar::q_monomial(K, op.scale_qexp).pow(-d);
        // assemble projection vector of alpha at residue d
        std::vector<Cyclotomic> xvec(static_cast<size_t>(quad.N()),
                                     Cyclotomic::zero(K->cyclo));
        bool any = false;
        for (const auto& [rep, coeff] : hb.decompose(op.alpha, d)) {
          const auto* elem = hb.lookup(rep, d);
          for (size_t i = 0; i < xvec.size(); ++i)
            xvec[i] = xvec[i] + coeff * elem->vec[i];
          any = true;
        }
        if (!any) continue;
        Scalar c = scale * Scalar::from_rat(K, Rat(-static_cast<long>(quad.m()),
                                                   static_cast<unsigned long>(d)));
        term = term + annihilate_vec(hb, xvec, d, c, w[e - d]);
      }
      acc = acc + term.scaled(Scalar::from_rat(K, Rat(static_cast<long>(d))));
    }
    if (!acc.is_zero())
      w[e] = acc.scaled(Scalar::from_rat(K, Rat(1, static_cast<unsigned long>(e))));
  }
  return w;  // w[e] is the coefficient of z^{-e}
}

std::vector<FockVector> eminus_expand(const HeisenbergBasis& hb,
                                      const std::vector<EOperand>& ops,
                                      const FockVector& v, long long emax) {
  // exp(sum_{d>=1} O_d z^{d}) v with O_d = (m/d) u_{-d}(-d),
  // u_{-d} = sum_ops scale^{d} alpha_{(-d)}
  const auto& quad = *hb.quad();
  const KFieldPtr& K = quad.field();
  std::vector<FockVector> w(static_cast<size_t>(std::max<long long>(emax, 0)) + 1);
  w[0] = v;
  for (long long e = 1; e <= emax; ++e) {
    FockVector acc;
    for (long long d = 1; d <= e; ++d) {
      if (w[e - d].is_zero()) continue;
      FockVector term;
      for (const auto& op : ops) {
        Scalar scale = op.scale_qexp.empty()
                           ? Scalar::one(K)
                           : Scalar::q_monomial(K, op.scale_qexp).pow(d);
        Scalar c = scale * Scalar::from_rat(K, Rat(static_cast<long>(quad.m()),
                                                   static_cast<unsigned long>(d)));
        for (const auto& [rep, coeff] : hb.decompose(op.alpha, -d))
          term = term + create_one(hb, rep, -d,
                                   c * Scalar::from_cyclo(K, coeff), w[e - d]);
      }
      acc = acc + term.scaled(Scalar::from_rat(K, Rat(static_cast<long>(d))));
    }
    if (!acc.is_zero())
      w[e] = acc.scaled(Scalar::from_rat(K, Rat(1, static_cast<unsigned long>(e))));
  }
  return w;  // w[e] is the coefficient of z^{+e}
}

std::map<long long, FockVector> apply_E(const HeisenbergBasis& hb, int sign,
                                        const IntVec& alpha,
                                        const ExpVec& scale_qexp,
                                        const FockVector& v, long long window) {
  std::map<long long, FockVector> out;
  std::vector<EOperand> ops{{alpha, scale_qexp}};
  if (sign > 0) {
    auto w = eplus_expand(hb, ops, v);
    for (long long e = 0; e < static_cast<long long>(w.size()); ++e)
      if (e <= window && !w[e].is_zero()) out[-e] = w[e];
  } else {
    auto w = eminus_expand(hb, ops, v, window);
    for (long long e = 0; e < static_cast<long long>(w.size()); ++e)
      if (!w[e].is_zero()) out[e] = w[e];
  }
  return out;
}

long long graded_dimension(const HeisenbergBasis& hb, long long d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
  // product over n>=1 of (1-q^n)^{-dim H_{(-n)}}
  std::vector<long long> coef(static_cast<size_t>(d) + 1, 0);
  coef[0] = 1;
  for (long long n = 1; n <= d; ++n) {
    int mult = hb.dim(-n);
    for (int rep = 0; rep < mult; ++rep) {
      for (long long e = n; e <= d; ++e) coef[e] += coef[e - n];
    }
  }
  return coef[d];
}

}  // namespace tglie
