#include "glie.hpp"

#include <functional>

namespace tglie {

std::string GenKey::to_string() const {
  std::string s = j.to_string() + "(c=";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ";n=" + std::to_string(n) + ")";
}

std::optional<std::map<GenKey, Scalar>> generator_orbit(const Model& M,
                                                        const GenKey& key) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  std::map<GenKey, Scalar> orbit;
  bool zero = false;
  // visit(k, f): element(input) = f * element(k)
  std::function<void(const GenKey&, const Scalar&)> visit = [&](const GenKey& k,
                                                                const Scalar& f) {
    auto it = orbit.find(k);
    if (it != orbit.end()) {
      if (!(it->second == f)) zero = true;
      return;
    }
    orbit.emplace(k, f);
    IntVec alpha = q.jkey_vec(k.j);
    // orbit relation: element(k_1) = eta(1,alpha)^{-1} omega^{n} element(k)
    {
      GenKey nk{{q.nu_signed(k.j.a, 1), q.nu_signed(k.j.b, 1)}, k.c, k.n};
      Cyclotomic coeff =
          M.eta->eta(1, alpha).inverse() * q.omega_pow(k.n);
      visit(nk, f / Scalar::from_cyclo(K, coeff));
    }
    // flip relation: element(k) = (-1)^{delta_ij} c^{-n} element(flip)
    {
      GenKey nk{{k.j.b.negated(), k.j.a.negated()}, exp_neg(k.c), k.n};
      Scalar coeff = Scalar::q_monomial(K, k.c).pow(-k.n);
      if (k.j.diagonal_letters()) coeff = -coeff;
      visit(nk, f * coeff);
    }
  };
  visit(key, Scalar::one(K));
  if (zero) return std::nullopt;
  return orbit;
}

GenCanon canonicalize_generator(const Model& M, const GenKey& key) {
  auto orbit = generator_orbit(M, key);
  if (!orbit) return {true, key, Scalar::zero(M.field())};
  auto best = orbit->begin();
  return {false, best->first, best->second};
}

bool LieElement::is_zero() const {
  if (central_.num().field() != nullptr && !central_.is_zero()) return false;
  return t_.empty();
}

void LieElement::add(const Model& M, const GenKey& k, const Scalar& v) {
  if (v.is_zero()) return;
  GenCanon c = canonicalize_generator(M, k);
  if (c.zero) return;
  Scalar add = v * c.factor;
  auto it = t_.find(c.key);
  if (it == t_.end()) {
    t_.emplace(c.key, add);
    return;
  }
  it->second = it->second + add;
  if (it->second.is_zero()) t_.erase(it);
}

void LieElement::add_central(const Scalar& v) {
  if (central_.num().field() == nullptr)
    central_ = v;
  else
    central_ = central_ + v;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r(*this);
  for (const auto& [k, v] : o.t_) {
    auto it = r.t_.find(k);
    if (it == r.t_.end())
      r.t_.emplace(k, v);
    else {
      it->second = it->second + v;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  if (o.central_.num().field() != nullptr) r.add_central(o.central_);
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement r(*this);
  for (const auto& [k, v] : o.t_) {
    auto it = r.t_.find(k);
    if (it == r.t_.end())
      r.t_.emplace(k, -v);
    else {
      it->second = it->second - v;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  if (o.central_.num().field() != nullptr) r.add_central(-o.central_);
  return r;
}

LieElement LieElement::scaled(const Scalar& s) const {
  LieElement r;
  if (s.num().field() == nullptr) return r;
  for (const auto& [k, v] : t_) {
    Scalar w = v * s;
    if (!w.is_zero()) r.t_.emplace(k, w);
  }
  if (central_.num().field() != nullptr) r.central_ = central_ * s;
  return r;
}

bool LieElement::operator==(const LieElement& o) const {
  return (*this - o).is_zero();
}

std::string LieElement::to_string() const {
  std::string s;
  for (const auto& [k, v] : t_) s += k.to_string() + " * " + v.to_string() + "  ";
  if (central_.num().field() != nullptr && !central_.is_zero())
    s += "+ c * " + central_.to_string();
  if (s.empty()) s = "0";
  return s;
}

LieElement lie_generator(const Model& M, const GenKey& k) {
  LieElement x(M.field());
  x.add(M, k, Scalar::one(M.field()));
  return x;
}

LieElement bracket_pair(const Model& M, const GenKey& x, const GenKey& y) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  const int m = q.m();
  LieElement out(K);

  IntVec alpha = q.jkey_vec(x.j);
  IntVec beta = q.jkey_vec(y.j);
  long long nsum = x.n + y.n;
  Scalar inv_m = Scalar::from_rat(K, Rat(1, static_cast<unsigned long>(m)));
  Scalar inv_m2 = inv_m * inv_m;

  const SignedIndex A = x.j.a, B = x.j.b;
  bool dij = x.j.diagonal_letters();
  bool dkl = y.j.diagonal_letters();

  for (int r = 0; r < m; ++r) {
    SignedIndex Cr = q.nu_signed(y.j.a, r);
    SignedIndex Dr = q.nu_signed(y.j.b, r);
    // xi_r(alpha, beta) = eps(alpha, nu^r beta) eta(r, beta)
    Cyclotomic xi = M.epsC->eps(alpha, q.nu(beta, r)) * M.eta->eta(r, beta);
    Scalar base = inv_m * Scalar::from_cyclo(K, xi * q.omega_pow(-r * y.n));

    if (A == Cr.negated()) {
      Scalar coeff = base * Scalar::q_monomial(K, x.c).pow(-nsum);
      if (dij) coeff = -coeff;
      out.add(M, GenKey{{B.negated(), Dr}, exp_add(exp_neg(x.c), y.c), nsum},
              coeff);
    }
    if (B == Cr) {
      Scalar coeff = base * Scalar::q_monomial(K, x.c).pow(y.n);
      out.add(M, GenKey{{A, Dr}, exp_add(x.c, y.c), nsum}, coeff);
    }
    if (A == Dr) {
      Scalar coeff = base * Scalar::q_monomial(K, y.c).pow(-y.n) *
                     Scalar::q_monomial(K, x.c).pow(-nsum);
      if (dij != dkl) coeff = -coeff;
      out.add(M,
              GenKey{{B.negated(), Cr.negated()},
                     exp_add(exp_neg(x.c), exp_neg(y.c)), nsum},
              coeff);
    }
    if (B.negated() == Dr) {
      Scalar coeff = base * Scalar::q_monomial(K, y.c).pow(-y.n) *
                     Scalar::q_monomial(K, x.c).pow(y.n);
      if (dkl) coeff = -coeff;
      out.add(M, GenKey{{A, Cr.negated()}, exp_add(x.c, exp_neg(y.c)), nsum},
              coeff);
    }
    if (nsum == 0) {
      // central families, gated on the group-element tests
      Scalar cbase = inv_m2 *
                     Scalar::from_cyclo(K, xi * q.omega_pow(-r * y.n)) *
                     Scalar::from_rat(K, Rat(static_cast<long>(x.n)));
      if (exp_is_zero(exp_add(x.c, y.c)) && B == Cr && A == Dr)
        out.add_central(cbase * Scalar::q_monomial(K, x.c).pow(-x.n));
      if (x.c == y.c && A == Cr.negated() && B == Dr.negated()) {
        Scalar t = cbase;
        if (dij) t = -t;
        out.add_central(t);
      }
    }
  }
  return out;
}

LieElement bracket_cr(const Model& M, const LieElement& x, const LieElement& y) {
  LieElement out(M.field());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      out = out + bracket_pair(M, kx, ky).scaled(cx * cy);
  return out;
}

GQAssoc build_gq_as_assoc(const Model& M) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  std::vector<JKey> keys = q.enumerate_J();
  std::map<JKey, int> index_of;
  for (size_t i = 0; i < keys.size(); ++i) index_of[keys[i]] = static_cast<int>(i);

  InvolutiveAlgebra A(K, static_cast<int>(keys.size()), q.m());
  auto one = Cyclotomic::one(K->cyclo);
  (void)one;
  for (size_t a = 0; a < keys.size(); ++a) {
    IntVec va = q.jkey_vec(keys[a]);
    for (size_t b = 0; b < keys.size(); ++b) {
      // e_{A,B} e_{C,D} = delta_{B,C} eps(alpha, beta) e_{A,D}
      if (keys[a].b == keys[b].a) {
        JKey prod{keys[a].a, keys[b].b};
        IntVec vb = q.jkey_vec(keys[b]);
        A.set_product(static_cast<int>(a), static_cast<int>(b),
                      {{index_of.at(prod), M.epsC->eps(va, vb)}});
      }
      // form: delta_{B,C} delta_{A,D} eps(alpha, beta)
      if (keys[a].b == keys[b].a && keys[a].a == keys[b].b)
        A.set_form(static_cast<int>(a), static_cast<int>(b),
                   M.epsC->eps(va, q.jkey_vec(keys[b])));
    }
    // tau(e_{A,B}) = (-1)^{1-delta_ij} e_{-B,-A}
    {
      JKey t{keys[a].b.negated(), keys[a].a.negated()};
      Cyclotomic c = Cyclotomic::one(K->cyclo);
      if (!keys[a].diagonal_letters()) c = -c;
      A.set_tau(static_cast<int>(a), {{index_of.at(t), c}});
    }
    // theta(e_{A,B}) = eta(1, alpha) e_{A_1, B_1}
    {
      JKey t{q.nu_signed(keys[a].a, 1), q.nu_signed(keys[a].b, 1)};
      A.set_theta(static_cast<int>(a), {{index_of.at(t), M.eta->eta(1, va)}});
    }
  }
  return {std::move(A), std::move(keys), std::move(index_of)};
}

AssocElement expand_generator(const Model& M, const GQAssoc& G, const GenKey& k) {
  return assoc_generator(G.algebra, G.index_of.at(k.j), k.c, k.n);
}

AssocElement expand_element(const Model& M, const GQAssoc& G, const LieElement& x) {
  AssocElement out;
  out.add_central(Scalar::zero(M.field()));
  for (const auto& [k, v] : x.terms())
    out = out + expand_generator(M, G, k).scaled(v);
  if (x.central().num().field() != nullptr) out.add_central(x.central());
  return out;
}

}  // namespace tglie
