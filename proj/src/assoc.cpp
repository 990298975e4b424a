#include "assoc.hpp"

#include <sstream>
#include <stdexcept>

namespace tglie {

InvolutiveAlgebra::InvolutiveAlgebra(KFieldPtr fld, int dim, int order)
    : fld_(std::move(fld)), dim_(dim), order_(order) {
  if (fld_->cyclo->conductor() % order_ != 0)
    throw std::invalid_argument("conductor must be divisible by the order");
  mult_.assign(dim_, std::vector<SparseVec>(dim_));
  tau_.assign(dim_, {});
  theta_.assign(dim_, {});
  form_.assign(dim_, std::vector<Cyclotomic>(dim_, Cyclotomic::zero(fld_->cyclo)));
}

Cyclotomic InvolutiveAlgebra::omega_pow(long long k) const {
  int L = fld_->cyclo->conductor();
  return Cyclotomic::zeta_power(fld_->cyclo, k * (L / order_));
}

void InvolutiveAlgebra::set_product(int a, int b, SparseVec v) {
  mult_[a][b] = std::move(v);
}
void InvolutiveAlgebra::set_tau(int a, SparseVec v) { tau_[a] = std::move(v); }
void InvolutiveAlgebra::set_theta(int a, SparseVec v) { theta_[a] = std::move(v); }
void InvolutiveAlgebra::set_form(int a, int b, Cyclotomic v) {
  form_[a][b] = std::move(v);
}

namespace {
void sparse_add(InvolutiveAlgebra::SparseVec& acc, int idx, const Cyclotomic& c) {
  if (c.is_zero()) return;
  for (auto& [i, v] : acc)
    if (i == idx) {
      v = v + c;
      return;
    }
  acc.emplace_back(idx, c);
}
void sparse_prune(InvolutiveAlgebra::SparseVec& acc) {
  acc.erase(std::remove_if(acc.begin(), acc.end(),
                           [](const auto& p) { return p.second.is_zero(); }),
            acc.end());
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}
}  // namespace

InvolutiveAlgebra::SparseVec InvolutiveAlgebra::apply_tau(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [a, c] : v)
    for (const auto& [b, w] : tau_[a]) sparse_add(out, b, c * w);
  sparse_prune(out);
  return out;
}

InvolutiveAlgebra::SparseVec InvolutiveAlgebra::apply_theta(
    const SparseVec& v) const {
  SparseVec out;
  for (const auto& [a, c] : v)
    for (const auto& [b, w] : theta_[a]) sparse_add(out, b, c * w);
  sparse_prune(out);
  return out;
}

InvolutiveAlgebra::SparseVec InvolutiveAlgebra::multiply(const SparseVec& x,
                                                         const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [d, cd] : mult_[a][b]) sparse_add(out, d, ca * cb * cd);
  sparse_prune(out);
  return out;
}

Cyclotomic InvolutiveAlgebra::pair(const SparseVec& x, const SparseVec& y) const {
  Cyclotomic acc = Cyclotomic::zero(fld_->cyclo);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) acc = acc + ca * cb * form_[a][b];
  return acc;
}

InvolutiveAlgebra::SparseVec InvolutiveAlgebra::project(const SparseVec& x,
                                                        long long n) const {
  SparseVec out;
  SparseVec cur = x;
  Rat inv_m(1, static_cast<unsigned long>(order_));
  for (int p = 0; p < order_; ++p) {
    Cyclotomic w = omega_pow(-n * p) * Cyclotomic::from_rat(fld_->cyclo, inv_m);
    for (const auto& [a, c] : cur) sparse_add(out, a, c * w);
    cur = apply_theta(cur);
  }
  sparse_prune(out);
  return out;
}

std::optional<std::pair<int, Cyclotomic>> InvolutiveAlgebra::tau_monomial(
    int a) const {
  if (tau_[a].size() != 1) return std::nullopt;
  return tau_[a][0];
}

std::optional<std::pair<int, Cyclotomic>> InvolutiveAlgebra::theta_monomial(
    int a) const {
  if (theta_[a].size() != 1) return std::nullopt;
  return theta_[a][0];
}

bool InvolutiveAlgebra::ValidationReport::ok() const {
  for (const auto& [id, pass] : checks)
    if (!pass) return false;
  return true;
}

std::string InvolutiveAlgebra::ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& [id, pass] : checks) os << id << ": " << (pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

InvolutiveAlgebra::ValidationReport InvolutiveAlgebra::validate() const {
  ValidationReport rep;
  auto unit = [&](int a) {
    SparseVec v;
    v.emplace_back(a, Cyclotomic::one(fld_->cyclo));
    return v;
  };
  auto eq = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec d = x;
    for (const auto& [i, c] : y) sparse_add(d, i, -c);
    sparse_prune(d);
    return d.empty();
  };

  bool assoc_ok = true;
  for (int a = 0; a < dim_ && assoc_ok; ++a)
    for (int b = 0; b < dim_ && assoc_ok; ++b)
      for (int c = 0; c < dim_ && assoc_ok; ++c)
        assoc_ok = eq(multiply(multiply(unit(a), unit(b)), unit(c)),
                      multiply(unit(a), multiply(unit(b), unit(c))));
  rep.checks.emplace_back("associativity", assoc_ok);

  bool tau_anti = true, tau_inv = true;
  for (int a = 0; a < dim_ && tau_anti; ++a)
    for (int b = 0; b < dim_ && tau_anti; ++b)
      tau_anti = eq(apply_tau(multiply(unit(a), unit(b))),
                    multiply(apply_tau(unit(b)), apply_tau(unit(a))));
  for (int a = 0; a < dim_ && tau_inv; ++a)
    tau_inv = eq(apply_tau(apply_tau(unit(a))), unit(a));
  rep.checks.emplace_back("anti-involution", tau_anti);
  rep.checks.emplace_back("involution order 2", tau_inv);

  bool theta_m = true;
  for (int a = 0; a < dim_ && theta_m; ++a) {
    SparseVec v = unit(a);
    for (int p = 0; p < order_; ++p) v = apply_theta(v);
    theta_m = eq(v, unit(a));
  }
  rep.checks.emplace_back("automorphism order", theta_m);

  bool theta_alg = true;
  for (int a = 0; a < dim_ && theta_alg; ++a)
    for (int b = 0; b < dim_ && theta_alg; ++b)
      theta_alg = eq(apply_theta(multiply(unit(a), unit(b))),
                     multiply(apply_theta(unit(a)), apply_theta(unit(b))));
  rep.checks.emplace_back("automorphism multiplicative", theta_alg);

  bool commute = true;
  for (int a = 0; a < dim_ && commute; ++a)
    commute = eq(apply_theta(apply_tau(unit(a))), apply_tau(apply_theta(unit(a))));
  rep.checks.emplace_back("theta tau commute", commute);

  bool sym = true, invariant = true, tau_form = true, theta_form = true;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      if (form_[a][b] != form_[b][a]) sym = false;
      if (pair(apply_tau(unit(a)), apply_tau(unit(b))) != form_[a][b])
        tau_form = false;
      if (pair(apply_theta(unit(a)), apply_theta(unit(b))) != form_[a][b])
        theta_form = false;
      for (int c = 0; c < dim_; ++c)
        if (pair(multiply(unit(a), unit(b)), unit(c)) !=
            pair(unit(a), multiply(unit(b), unit(c))))
          invariant = false;
    }
  rep.checks.emplace_back("form symmetric", sym);
  rep.checks.emplace_back("form invariant", invariant);
  rep.checks.emplace_back("form tau-stable", tau_form);
  rep.checks.emplace_back("form theta-stable", theta_form);
  return rep;
}

bool AssocElement::is_zero() const {
  if (!central_.num().terms().empty()) return false;
  return t_.empty();
}

void AssocElement::add_raw(const AssocKey& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) t_.erase(it);
}

void AssocElement::add_central(const Scalar& v) {
  if (central_.num().field() == nullptr)
    central_ = v;
  else
    central_ = central_ + v;
  if (central_.is_zero() && central_.num().field() != nullptr)
    central_ = Scalar::zero(central_.field());
}

AssocElement AssocElement::operator+(const AssocElement& o) const {
  AssocElement r(*this);
  for (const auto& [k, v] : o.t_) r.add_raw(k, v);
  if (o.central_.num().field() != nullptr) r.add_central(o.central_);
  return r;
}

AssocElement AssocElement::operator-(const AssocElement& o) const {
  AssocElement r(*this);
  for (const auto& [k, v] : o.t_) r.add_raw(k, -v);
  if (o.central_.num().field() != nullptr) r.add_central(-o.central_);
  return r;
}

AssocElement AssocElement::scaled(const Scalar& s) const {
  AssocElement r;
  for (const auto& [k, v] : t_) r.add_raw(k, v * s);
  if (central_.num().field() != nullptr) r.add_central(central_ * s);
  return r;
}

bool AssocElement::operator==(const AssocElement& o) const {
  return (*this - o).is_zero();
}

std::string AssocElement::to_string() const {
  std::string s;
  for (const auto& [k, v] : t_) {
    s += "e" + std::to_string(k.a) + "(c=";
    for (size_t i = 0; i < k.c.size(); ++i)
      s += (i ? "," : "") + std::to_string(k.c[i]);
    s += ";n=" + std::to_string(k.n) + ") * " + v.to_string() + "  ";
  }
  if (central_.num().field() != nullptr && !central_.is_zero())
    s += "+ c * " + central_.to_string();
  if (s.empty()) s = "0";
  return s;
}

AssocElement assoc_generator(const InvolutiveAlgebra& A, int a, const ExpVec& c,
                             long long n) {
  const KFieldPtr& K = A.field();
  AssocElement out;
  InvolutiveAlgebra::SparseVec unit{{a, Cyclotomic::one(K->cyclo)}};
  for (const auto& [b, coeff] : A.project(unit, n))
    out.add_raw({b, c, n}, Scalar::from_cyclo(K, coeff));
  // the involution part: -c^{-n} (tau a)_{(n)} at exponent -c
  InvolutiveAlgebra::SparseVec ta = A.apply_tau(unit);
  Scalar mono = Scalar::q_monomial(K, c).pow(-n);
  for (const auto& [b, coeff] : A.project(ta, n))
    out.add_raw({b, exp_neg(c), n}, -mono * Scalar::from_cyclo(K, coeff));
  out.add_central(Scalar::zero(K));
  return out;
}

AssocElement bracket_from_definition(const InvolutiveAlgebra& A,
                                     const AssocElement& x,
                                     const AssocElement& y) {
  const KFieldPtr& K = A.field();
  AssocElement out;
  out.add_central(Scalar::zero(K));
  Rat half_inv_m(1, 2 * static_cast<unsigned long>(A.order()));
  for (const auto& [kx, cx] : x.raw()) {
    InvolutiveAlgebra::SparseVec ux{{kx.a, Cyclotomic::one(K->cyclo)}};
    for (const auto& [ky, cy] : y.raw()) {
      Scalar coeff = cx * cy;
      InvolutiveAlgebra::SparseVec uy{{ky.a, Cyclotomic::one(K->cyclo)}};
      ExpVec csum = exp_add(kx.c, ky.c);
      long long nsum = kx.n + ky.n;
      // c1^r (x y) - c2^n (y x), both at t^{n+r} T_{c1 c2}
      Scalar c1r = Scalar::q_monomial(K, kx.c).pow(ky.n);
      Scalar c2n = Scalar::q_monomial(K, ky.c).pow(kx.n);
      for (const auto& [d, cd] : A.multiply(ux, uy))
        out.add_raw({d, csum, nsum}, coeff * c1r * Scalar::from_cyclo(K, cd));
      for (const auto& [d, cd] : A.multiply(uy, ux))
        out.add_raw({d, csum, nsum}, -coeff * c2n * Scalar::from_cyclo(K, cd));
      // central 2-cocycle
      if (kx.n + ky.n == 0 && exp_is_zero(csum)) {
        Cyclotomic frm = A.form(kx.a, ky.a);
        if (!frm.is_zero()) {
          Scalar val = coeff * c1r *
                       Scalar::from_cyclo(
                           K, frm * Cyclotomic::from_rat(
                                        K->cyclo,
                                        Rat(static_cast<long>(kx.n)) * half_inv_m));
          out.add_central(val);
        }
      }
    }
  }
  return out;
}

AssocCanon canonicalize_assoc(const InvolutiveAlgebra& A, const AssocKey& key) {
  const KFieldPtr& K = A.field();
  // orbit under: rot (theta eigen-relation) and flip (symmetrization)
  // element(key0) = factor * element(key)
  std::map<AssocKey, Scalar> orbit;
  bool zero = false;
  std::function<void(const AssocKey&, const Scalar&)> visit =
      [&](const AssocKey& k, const Scalar& f) {
        auto it = orbit.find(k);
        if (it != orbit.end()) {
          if (!(it->second == f)) zero = true;
          return;
        }
        orbit.emplace(k, f);
        // rot: element(theta-image index) = thetacoeff^{-1} omega^n element(k)
        auto th = A.theta_monomial(k.a);
        if (!th)
          throw std::invalid_argument("canonicalize: automorphism not monomial");
        {
          // element(nk) = coeff * element(k)
          // => element(key0) = f * coeff^{-1} * element(nk)
          AssocKey nk{th->first, k.c, k.n};
          Scalar coeff = Scalar::from_cyclo(K, th->second.inverse() *
                                                   A.omega_pow(k.n));
          visit(nk, f / coeff);
        }
        // flip: element(k) = -c^{-n} taucoeff element(tau-image, -c, n)
        auto tm = A.tau_monomial(k.a);
        if (!tm)
          throw std::invalid_argument("canonicalize: involution not monomial");
        {
          AssocKey nk{tm->first, exp_neg(k.c), k.n};
          Scalar coeff = -Scalar::q_monomial(K, k.c).pow(-k.n) *
                         Scalar::from_cyclo(K, tm->second);
          // element(k) = coeff * element(nk) => element(key0) = f*coeff*element(nk)
          visit(nk, f * coeff);
        }
      };
  visit(key, Scalar::one(K));
  if (zero) return {true, key, Scalar::zero(K)};
  auto best = orbit.begin();
  return {false, best->first, best->second};
}

std::pair<std::map<AssocKey, Scalar>, Scalar> tilde_decompose(
    const InvolutiveAlgebra& A, const AssocElement& x) {
  const KFieldPtr& K = A.field();
  std::map<AssocKey, Scalar> out;
  Scalar half = Scalar::from_rat(K, Rat(1, 2));
  for (const auto& [k, v] : x.raw()) {
    AssocCanon c = canonicalize_assoc(A, k);
    if (c.zero) continue;
    Scalar add = v * half * c.factor;
    auto it = out.find(c.key);
    if (it == out.end())
      out.emplace(c.key, add);
    else {
      it->second = it->second + add;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  Scalar central = x.central().num().field() == nullptr ? Scalar::zero(K)
                                                        : x.central();
  return {out, central};
}

// ---- catalog -------------------------------------------------------------

InvolutiveAlgebra make_matrix_pair_algebra(int N, const KFieldPtr& K,
                                           bool transpose_twist) {
  // basis: (E_{ij}, 0) -> i*N+j ; (0, E_{ij}) -> N^2 + i*N+j
  const int NN = N * N;
  InvolutiveAlgebra A(K, 2 * NN, transpose_twist ? 2 : 1);
  auto one = Cyclotomic::one(K->cyclo);
  auto idx1 = [N](int i, int j) { return i * N + j; };
  auto idx2 = [N, NN](int i, int j) { return NN + i * N + j; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          // (E_ij,0)(E_kl,0) = delta_jk (E_il, 0)
          if (j == k) A.set_product(idx1(i, j), idx1(k, l), {{idx1(i, l), one}});
          // (0,E_ij)(0,E_kl) = (0, E_kl E_ij) = delta_li (0, E_kj)
          if (l == i) A.set_product(idx2(i, j), idx2(k, l), {{idx2(k, j), one}});
        }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      A.set_tau(idx1(i, j), {{idx2(i, j), one}});
      A.set_tau(idx2(i, j), {{idx1(i, j), one}});
      if (transpose_twist) {
        // theta(A,B) = (B^t, A^t)
        A.set_theta(idx1(i, j), {{idx2(j, i), one}});
        A.set_theta(idx2(i, j), {{idx1(j, i), one}});
      } else {
        A.set_theta(idx1(i, j), {{idx1(i, j), one}});
        A.set_theta(idx2(i, j), {{idx2(i, j), one}});
      }
      // trace form on both summands
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          if (j == k && i == l) {
            A.set_form(idx1(i, j), idx1(k, l), one);
            A.set_form(idx2(i, j), idx2(k, l), one);
          }
        }
    }
  return A;
}

InvolutiveAlgebra make_two_line_algebra(const KFieldPtr& K, bool twisted) {
  InvolutiveAlgebra A(K, 2, twisted ? 2 : 1);
  auto one = Cyclotomic::one(K->cyclo);
  A.set_product(0, 0, {{0, one}});
  A.set_product(1, 1, {{1, one}});
  A.set_tau(0, {{1, one}});
  A.set_tau(1, {{0, one}});
  if (twisted) {
    A.set_theta(0, {{1, one}});
    A.set_theta(1, {{0, one}});
  } else {
    A.set_theta(0, {{0, one}});
    A.set_theta(1, {{1, one}});
  }
  A.set_form(0, 0, one);
  A.set_form(1, 1, one);
  return A;
}

InvolutiveAlgebra make_signed_matrix_algebra(int N, const KFieldPtr& K) {
  // rows and columns indexed by signed letters: +i -> i, -i -> N+i
  const int D = 2 * N;
  InvolutiveAlgebra A(K, D * D, 1);
  auto one = Cyclotomic::one(K->cyclo);
  auto neg = [N, D](int s) { return s < N ? s + N : s - N; };
  auto idx = [D](int r, int c) { return r * D + c; };
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) {
      for (int r2 = 0; r2 < D; ++r2)
        for (int c2 = 0; c2 < D; ++c2)
          if (c == r2) A.set_product(idx(r, c), idx(r2, c2), {{idx(r, c2), one}});
      A.set_tau(idx(r, c), {{idx(neg(c), neg(r)), one}});
      A.set_theta(idx(r, c), {{idx(r, c), one}});
      A.set_form(idx(r, c), idx(c, r), one);
    }
  return A;
}

CatalogAlgebra catalog_algebra(const std::string& name, int N, int gamma_rank) {
  KFieldPtr K = make_kfield(4, gamma_rank);
  if (name == "gl_quantum_torus") {
    InvolutiveAlgebra A = make_matrix_pair_algebra(N, K, false);
    auto gen = [A, N](const std::vector<long long>& ij, const ExpVec& c,
                      long long n) {
      return assoc_generator(A, static_cast<int>(ij[0]) * N + static_cast<int>(ij[1]),
                             c, n);
    };
    return {name, std::move(A), gen};
  }
  if (name == "unitary") {
    InvolutiveAlgebra A = make_matrix_pair_algebra(N, K, true);
    auto gen = [A, N](const std::vector<long long>& ij, const ExpVec& c,
                      long long n) {
      // u_{ij}(c,n) = 2 * tilde{(E_ij,0)}(c,n)
      return assoc_generator(A, static_cast<int>(ij[0]) * N + static_cast<int>(ij[1]),
                             c, n)
          .scaled(Scalar::from_rat(A.field(), Rat(2)));
    };
    return {name, std::move(A), gen};
  }
  if (name == "trigonometric_A" || name == "trigonometric_B") {
    bool tw = name == "trigonometric_B";
    InvolutiveAlgebra A = make_two_line_algebra(K, tw);
    Scalar factor = Scalar::from_rat(K, Rat(tw ? 2 : 1));
    auto gen = [A, factor](const std::vector<long long>& unused, const ExpVec& c,
                           long long n) {
      (void)unused;
      // A_{v,n} (resp. B_{v,n}) = factor * s^{n v} tilde{(1,0)}(q^v, n)
      Scalar pre = Scalar::q_power_half(A.field(), c, n);
      return assoc_generator(A, 0, c, n).scaled(pre * factor);
    };
    return {name, std::move(A), gen};
  }
  if (name == "bc_graded_o2N") {
    InvolutiveAlgebra A = make_signed_matrix_algebra(N, K);
    auto gen = [A, N](const std::vector<long long>& rhoij, const ExpVec& c,
                      long long n) {
      // indices: (rho_i, i, rho_j, j) with 0-based letters
      auto enc = [N](long long rho, long long i) {
        return rho > 0 ? static_cast<int>(i) : static_cast<int>(i) + N;
      };
      int r = enc(rhoij[0], rhoij[1]);
      int cc = enc(rhoij[2], rhoij[3]);
      return assoc_generator(A, r * 2 * N + cc, c, n);
    };
    return {name, std::move(A), gen};
  }
  throw std::invalid_argument("unknown catalog algebra: " + name);
}

}  // namespace tglie
