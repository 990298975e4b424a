#include "realizations.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace tglie {

namespace {

// ---------------------------------------------------------------- elements

using OKey = std::vector<long long>;

struct OElem {
  std::map<OKey, Scalar> t;
  Scalar central;

  void add_raw(const OKey& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, v);
      return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) t.erase(it);
  }
  void add_central(const Scalar& v) {
    if (central.num().field() == nullptr)
      central = v;
    else
      central = central + v;
  }
  bool is_zero() const {
    if (central.num().field() != nullptr && !central.is_zero()) return false;
    return t.empty();
  }
  OElem operator+(const OElem& o) const {
    OElem r(*this);
    for (const auto& [k, v] : o.t) r.add_raw(k, v);
    if (o.central.num().field() != nullptr) r.add_central(o.central);
    return r;
  }
  OElem operator-(const OElem& o) const {
    OElem r(*this);
    for (const auto& [k, v] : o.t) r.add_raw(k, -v);
    if (o.central.num().field() != nullptr) r.add_central(-o.central);
    return r;
  }
  OElem scaled(const Scalar& s) const {
    OElem r;
    for (const auto& [k, v] : t) r.add_raw(k, v * s);
    if (central.num().field() != nullptr) r.central = central * s;
    return r;
  }
  bool operator==(const OElem& o) const { return (*this - o).is_zero(); }
};

// ---------------------------------------------------------------- oracles

class Oracle {
 public:
  explicit Oracle(KFieldPtr K) : K_(std::move(K)) {}
  virtual ~Oracle() = default;

  // element(key) = factor * element(canonical); nullopt encodes zero
  virtual std::optional<std::pair<OKey, Scalar>> canon(const OKey& k) const {
    return std::make_pair(k, Scalar::one(K_));
  }
  virtual OElem bracket_keys(const OKey& a, const OKey& b) const = 0;

  void add(OElem& e, const OKey& k, const Scalar& v) const {
    if (v.is_zero()) return;
    auto c = canon(k);
    if (!c) return;
    e.add_raw(c->first, v * c->second);
  }
  OElem bracket(const OElem& x, const OElem& y) const {
    OElem r;
    r.add_central(Scalar::zero(K_));
    for (const auto& [ka, va] : x.t)
      for (const auto& [kb, vb] : y.t) r = r + bracket_keys(ka, kb).scaled(va * vb);
    return r;
  }

 protected:
  KFieldPtr K_;
};

// matrix algebra over the group ring, homogeneous presentation
class GlOracle : public Oracle {
 public:
  GlOracle(KFieldPtr K, int rank) : Oracle(std::move(K)), l_(rank) {}
  // key: [i, j, n, v...]
  OKey key(long long i, long long j, long long n, const ExpVec& v) const {
    OKey k{i, j, n};
    for (int x : v) k.push_back(x);
    return k;
  }
  static ExpVec cpart(const OKey& k, int l) {
    ExpVec v(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i) v[i] = static_cast<int>(k[3 + i]);
    return v;
  }
  OElem bracket_keys(const OKey& a, const OKey& b) const override {
    OElem r;
    r.add_central(Scalar::zero(K_));
    auto [i, j, n] = std::tuple{a[0], a[1], a[2]};
    auto [k, p, rr] = std::tuple{b[0], b[1], b[2]};
    ExpVec cn = cpart(a, l_), cr = cpart(b, l_);
    Scalar qrn = Scalar::q_monomial(K_, cn).pow(rr);  // q^{r n-vec}
    Scalar qnr = Scalar::q_monomial(K_, cr).pow(n);   // q^{n r-vec}
    ExpVec cs = exp_add(cn, cr);
    if (j == k) add(r, key(i, p, n + rr, cs), qrn);
    if (i == p) add(r, key(k, j, n + rr, cs), -qnr);
    if (j == k && i == p && n + rr == 0 && exp_is_zero(cs))
      r.add_central(qnr * Scalar::from_rat(K_, Rat(static_cast<long>(n))));
    return r;
  }
  int l_;
};

// principal presentation of the matrix algebra over the rescaled group ring
class PrincipalOracle : public Oracle {
 public:
  PrincipalOracle(KFieldPtr K, int N, QuadruplePtr quad)
      : Oracle(std::move(K)), N_(N), quad_(std::move(quad)) {}
  // key: [ibar (1..N), n, v...]
  OKey key(long long ibar, long long n, const ExpVec& v) const {
    OKey k{ibar, n};
    for (int x : v) k.push_back(x);
    return k;
  }
  ExpVec cpart(const OKey& k) const {
    ExpVec v(k.size() - 2, 0);
    for (size_t i = 2; i < k.size(); ++i) v[i - 2] = static_cast<int>(k[i]);
    return v;
  }
  OElem bracket_keys(const OKey& a, const OKey& b) const override {
    OElem r;
    r.add_central(Scalar::zero(K_));
    long long i = a[0], n = a[1], j = b[0], rr = b[1];
    ExpVec cn = cpart(a), cr = cpart(b);
    ExpVec cs = exp_add(cn, cr);
    long long ij = (i + j) % N_ == 0 ? N_ : (i + j) % N_;
    Scalar w_jn = Scalar::from_cyclo(K_, quad_->omega_pow(j * n));
    Scalar w_ir = Scalar::from_cyclo(K_, quad_->omega_pow(i * rr));
    Scalar q_rn = Scalar::q_monomial(K_, cn).pow(rr);
    Scalar q_nr = Scalar::q_monomial(K_, cr).pow(n);
    add(r, key(ij, n + rr, cs), w_jn * q_rn);
    add(r, key(ij, n + rr, cs), -w_ir * q_nr);
    if (ij == N_ && n + rr == 0 && exp_is_zero(cs))
      r.add_central(Scalar::from_rat(K_, Rat(static_cast<long>(n))) * q_rn * w_jn);
    return r;
  }
  int N_;
  QuadruplePtr quad_;
};

// loop presentation of the root-lattice current algebra
class AffineOracle : public Oracle {
 public:
  AffineOracle(const Model& M) : Oracle(M.field()), M_(&M) {
    const Quadruple& q = *M.quad;
    // enumerate the norm-2 vectors of Q
    for (int i = 0; i < q.N(); ++i)
      for (int j = i + 1; j < q.N(); ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            IntVec v(static_cast<size_t>(q.N()), 0);
            v[i] = si;
            v[j] = sj;
            if (q.in_Q(v)) roots_.push_back(v);
          }
    std::sort(roots_.begin(), roots_.end());
  }
  int root_index(const IntVec& v) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
    if (it == roots_.end() || *it != v)
      throw std::logic_error("vector outside the root list");
    return static_cast<int>(it - roots_.begin());
  }
  // key: [g, n] with g < N the Cartan letters, g >= N the roots
  OElem bracket_keys(const OKey& a, const OKey& b) const override {
    const Quadruple& q = *M_->quad;
    OElem r;
    r.add_central(Scalar::zero(K_));
    long long g1 = a[0], n = a[1], g2 = b[0], rr = b[1];
    const int N = q.N();
    Scalar inv_m =
        Scalar::from_rat(K_, Rat(1, static_cast<unsigned long>(q.m())));
    auto central_pair = [&](const Cyclotomic& form) {
      if (n + rr == 0)
        r.add_central(inv_m * Scalar::from_rat(K_, Rat(static_cast<long>(n))) *
                      Scalar::from_cyclo(K_, form));
    };
    if (g1 < N && g2 < N) {
      central_pair(g1 == g2 ? Cyclotomic::one(K_->cyclo)
                            : Cyclotomic::zero(K_->cyclo));
      return r;
    }
    if (g1 < N) {
      const IntVec& beta = roots_[g2 - N];
      Scalar c = Scalar::from_rat(K_, Rat(static_cast<long>(beta[g1])));
      add(r, OKey{g2, n + rr}, c);
      return r;
    }
    if (g2 < N) {
      const IntVec& alpha = roots_[g1 - N];
      Scalar c = Scalar::from_rat(K_, Rat(-static_cast<long>(alpha[g2])));
      add(r, OKey{g1, n + rr}, c);
      return r;
    }
    const IntVec& alpha = roots_[g1 - N];
    const IntVec& beta = roots_[g2 - N];
    IntVec sum = vec_add(alpha, beta);
    if (vec_is_zero(sum)) {
      Cyclotomic eps = M_->epsC->eps(alpha, vec_neg(alpha));
      for (int u = 0; u < N; ++u)
        if (alpha[u] != 0)
          add(r, OKey{u, n + rr},
              Scalar::from_cyclo(K_, eps) *
                  Scalar::from_rat(K_, Rat(static_cast<long>(alpha[u]))));
      central_pair(eps);
      return r;
    }
    if (dot(alpha, beta) == -1) {
      add(r, OKey{N + root_index(sum), n + rr},
          Scalar::from_cyclo(K_, M_->epsC->eps(alpha, beta)));
    }
    return r;
  }
  const Model* M_;
  std::vector<IntVec> roots_;
};

// trigonometric series, plain and half-period twisted
class TrigOracle : public Oracle {
 public:
  TrigOracle(KFieldPtr K, bool twisted) : Oracle(std::move(K)), tw_(twisted) {}
  // key: [n, v...]
  OKey key(long long n, const ExpVec& v) const {
    OKey k{n};
    for (int x : v) k.push_back(x);
    return k;
  }
  static ExpVec cpart(const OKey& k) {
    ExpVec v(k.size() - 1, 0);
    for (size_t i = 1; i < k.size(); ++i) v[i - 1] = static_cast<int>(k[i]);
    return v;
  }
  std::optional<std::pair<OKey, Scalar>> canon(const OKey& k) const override {
    if (!tw_) return std::make_pair(k, Scalar::one(K_));
    ExpVec v = cpart(k);
    ExpVec nv = exp_neg(v);
    long long n = k[0];
    // half-period relation: element[n, v] = -(-1)^n element[n, -v]
    if (exp_is_zero(v)) {
      if (n % 2 == 0) return std::nullopt;
      return std::make_pair(k, Scalar::one(K_));
    }
    if (v < nv) return std::make_pair(k, Scalar::one(K_));
    Scalar f = Scalar::from_rat(K_, Rat(n % 2 == 0 ? -1 : 1));
    return std::make_pair(key(n, nv), f);
  }
  OElem bracket_keys(const OKey& a, const OKey& b) const override {
    OElem r;
    r.add_central(Scalar::zero(K_));
    long long n = a[0], m = b[0];
    ExpVec u = cpart(a), v = cpart(b);
    // sine factor: s^{m u - n v} - s^{n v - m u}
    ExpVec e = exp_add(exp_scale(u, m), exp_scale(v, -n));
    Scalar sine = Scalar::s_monomial(K_, e) - Scalar::s_monomial(K_, exp_neg(e));
    add(r, key(n + m, exp_add(u, v)), sine);
    if (tw_) {
      ExpVec e2 = exp_add(exp_scale(u, -m), exp_scale(v, -n));
      Scalar sine2 =
          Scalar::s_monomial(K_, e2) - Scalar::s_monomial(K_, exp_neg(e2));
      if (m % 2 != 0) sine2 = -sine2;
      add(r, key(n + m, exp_add(u, exp_neg(v))), sine2);
    }
    if (n + m == 0) {
      Scalar cen = Scalar::zero(K_);
      if (exp_is_zero(exp_add(u, v)))
        cen = cen + Scalar::from_rat(K_, Rat(static_cast<long>(n)));
      if (tw_ && u == v) {
        Scalar t = Scalar::from_rat(K_, Rat(static_cast<long>(n)));
        if (n % 2 != 0) t = -t;
        cen = cen - t;
      }
      r.add_central(cen);
    }
    return r;
  }
  bool tw_;
};

// skew presentation with the u-flip relation
class UnitaryOracle : public Oracle {
 public:
  explicit UnitaryOracle(KFieldPtr K) : Oracle(std::move(K)) {}
  // key: [i, j, n, v...]
  OKey key(long long i, long long j, long long n, const ExpVec& v) const {
    OKey k{i, j, n};
    for (int x : v) k.push_back(x);
    return k;
  }
  static ExpVec cpart(const OKey& k) {
    ExpVec v(k.size() - 3, 0);
    for (size_t i = 3; i < k.size(); ++i) v[i - 3] = static_cast<int>(k[i]);
    return v;
  }
  std::optional<std::pair<OKey, Scalar>> canon(const OKey& k) const override {
    long long i = k[0], j = k[1], n = k[2];
    ExpVec v = cpart(k);
    OKey flip = key(j, i, n, exp_neg(v));
    // element(k) = -(-c)^{-n} element(flip)
    Scalar f = Scalar::q_monomial(K_, v).pow(-n);
    if (n % 2 == 0) f = -f;
    if (flip == k) {
      // self-paired: vanishes unless the factor is one
      if (!(f == Scalar::one(K_))) return std::nullopt;
      return std::make_pair(k, Scalar::one(K_));
    }
    if (k < flip) return std::make_pair(k, Scalar::one(K_));
    return std::make_pair(flip, f);
  }
  // the defining presentation: u_{ij}(c,n) is carried by four matrix-unit
  // tensors over the loop ring (letters on the plain and the opposite side);
  // the bracket is computed on those tensors and folded back.  The four-term
  // closed formula is recovered generically but stays exact at index
  // collisions, where the displayed formula double-counts.
  struct Raw {
    int side;  // 0: plain letters, 1: opposite letters
    long long a, b;
    ExpVec d;
    long long s;
    Scalar coeff;
  };
  std::vector<Raw> expand(const OKey& k) const {
    long long i = k[0], j = k[1], n = k[2];
    ExpVec c = cpart(k);
    Scalar one = Scalar::one(K_);
    Scalar sgn_n = n % 2 == 0 ? one : -one;
    Scalar cinv = Scalar::q_monomial(K_, c).pow(-n);
    return {
        {0, i, j, c, n, one},
        {1, j, i, c, n, sgn_n},
        {1, i, j, exp_neg(c), n, -cinv},
        {0, j, i, exp_neg(c), n, -sgn_n * cinv},
    };
  }
  void fold(OElem& out, int side, long long a, long long b, const ExpVec& d,
            long long s, const Scalar& coeff) const {
    Scalar quarter = coeff * Scalar::from_rat(K_, Rat(1, 4));
    if (side == 0) {
      add(out, key(a, b, s, d), quarter);
    } else {
      if (s % 2 != 0) quarter = -quarter;
      add(out, key(b, a, s, d), quarter);
    }
  }
  OElem bracket_keys(const OKey& x, const OKey& y) const override {
    OElem out;
    out.add_central(Scalar::zero(K_));
    for (const Raw& r1 : expand(x))
      for (const Raw& r2 : expand(y)) {
        if (r1.side != r2.side) continue;
        Scalar c = r1.coeff * r2.coeff;
        ExpVec ds = exp_add(r1.d, r2.d);
        long long ss = r1.s + r2.s;
        Scalar d1r = Scalar::q_monomial(K_, r1.d).pow(r2.s);
        Scalar d2n = Scalar::q_monomial(K_, r2.d).pow(r1.s);
        if (r1.side == 0) {
          if (r1.b == r2.a) fold(out, 0, r1.a, r2.b, ds, ss, c * d1r);
          if (r2.b == r1.a) fold(out, 0, r2.a, r1.b, ds, ss, -c * d2n);
        } else {
          // opposite multiplication: X_{ab} X_{cd} = delta_{da} X_{cb}
          if (r2.b == r1.a) fold(out, 1, r2.a, r1.b, ds, ss, c * d1r);
          if (r1.b == r2.a) fold(out, 1, r1.a, r2.b, ds, ss, -c * d2n);
        }
        // invariant central pairing at order two: (s/4) delta_{s+s',0}
        // delta_{dd',1} d^{s'} tr-pairing
        if (ss == 0 && exp_is_zero(ds) && r1.b == r2.a && r1.a == r2.b)
          out.add_central(c * d1r *
                          Scalar::from_rat(K_, Rat(static_cast<long>(r1.s), 4)));
      }
    return out;
  }
};

// signed matrix presentation with the f-flip relation
class SignedOracle : public Oracle {
 public:
  explicit SignedOracle(KFieldPtr K) : Oracle(std::move(K)) {}
  // key: [si, i, sj, j, n, v...]
  OKey key(long long si, long long i, long long sj, long long j, long long n,
           const ExpVec& v) const {
    OKey k{si, i, sj, j, n};
    for (int x : v) k.push_back(x);
    return k;
  }
  static ExpVec cpart(const OKey& k) {
    ExpVec v(k.size() - 5, 0);
    for (size_t i = 5; i < k.size(); ++i) v[i - 5] = static_cast<int>(k[i]);
    return v;
  }
  std::optional<std::pair<OKey, Scalar>> canon(const OKey& k) const override {
    long long si = k[0], i = k[1], sj = k[2], j = k[3], n = k[4];
    ExpVec v = cpart(k);
    // element(k) = -c^{-n} element(-B, -A at c^{-1})
    OKey flip = key(-sj, j, -si, i, n, exp_neg(v));
    Scalar f = -Scalar::q_monomial(K_, v).pow(-n);
    if (flip == k) {
      if (!(f == Scalar::one(K_))) return std::nullopt;
      return std::make_pair(k, Scalar::one(K_));
    }
    if (k < flip) return std::make_pair(k, Scalar::one(K_));
    return std::make_pair(flip, f);
  }
  OElem bracket_keys(const OKey& a, const OKey& b) const override {
    OElem r;
    r.add_central(Scalar::zero(K_));
    long long si = a[0], i = a[1], sj = a[2], j = a[3], n = a[4];
    long long sk = b[0], k = b[1], sl = b[2], l = b[3], rr = b[4];
    ExpVec c1 = cpart(a), c2 = cpart(b);
    Scalar c1r = Scalar::q_monomial(K_, c1).pow(rr);
    bool BeqC = sj == sk && j == k;
    bool AeqD = si == sl && i == l;
    bool AeqnC = si == -sk && i == k;
    bool BeqnD = sj == -sl && j == l;
    if (BeqC) add(r, key(si, i, sl, l, n + rr, exp_add(c1, c2)), c1r);
    if (AeqD) {
      Scalar f = Scalar::q_monomial(K_, c1).pow(-(n + rr)) *
                 Scalar::q_monomial(K_, c2).pow(-rr);
      add(r, key(-sj, j, -sk, k, n + rr, exp_add(exp_neg(c1), exp_neg(c2))), f);
    }
    if (AeqnC) {
      Scalar f = Scalar::q_monomial(K_, c1).pow(-(n + rr));
      add(r, key(-sj, j, sl, l, n + rr, exp_add(exp_neg(c1), c2)), -f);
    }
    if (BeqnD) {
      Scalar f = c1r * Scalar::q_monomial(K_, c2).pow(-rr);
      add(r, key(si, i, -sk, k, n + rr, exp_add(c1, exp_neg(c2))), -f);
    }
    if (n + rr == 0) {
      Scalar cen = Scalar::zero(K_);
      if (BeqC && AeqD && exp_is_zero(exp_add(c1, c2)))
        cen = cen + c1r * Scalar::from_rat(K_, Rat(static_cast<long>(n)));
      if (AeqnC && BeqnD && c1 == c2)
        cen = cen - Scalar::from_rat(K_, Rat(static_cast<long>(n)));
      r.add_central(cen);
    }
    return r;
  }
};

// ---------------------------------------------------------------- presets

QuadrupleSpec a_series(int N, int m_identity_or_neg, int rank, int conductor) {
  std::vector<IntVec> basis;
  for (int i = 0; i + 1 < N; ++i) {
    IntVec v(static_cast<size_t>(N), 0);
    v[i] = 1;
    v[i + 1] = -1;
    basis.push_back(v);
  }
  std::vector<int> sigma(N), iota(N, m_identity_or_neg == 2 ? -1 : 1);
  for (int i = 0; i < N; ++i) sigma[i] = i;
  return {N, basis, sigma, iota, m_identity_or_neg, rank, conductor};
}

QuadrupleSpec coxeter(int N, int rank, int conductor) {
  QuadrupleSpec s = a_series(N, 1, rank, conductor);
  for (int i = 0; i < N; ++i) s.sigma[i] = (i + 1) % N;
  s.m = N;
  return s;
}

QuadrupleSpec d_series(int N, bool diagram, int rank, int conductor) {
  std::vector<IntVec> basis;
  for (int i = 0; i + 1 < N; ++i) {
    IntVec v(static_cast<size_t>(N), 0);
    v[i] = 1;
    v[i + 1] = -1;
    basis.push_back(v);
  }
  IntVec last(static_cast<size_t>(N), 0);
  if (N >= 2) {
    last[N - 2] = 1;
    last[N - 1] = 1;
  } else {
    last[0] = 2;
  }
  basis.push_back(last);
  std::vector<int> sigma(N), iota(N, 1);
  for (int i = 0; i < N; ++i) sigma[i] = i;
  if (diagram) iota[N - 1] = -1;
  return {N, basis, sigma, iota, diagram ? 2 : 1, rank, conductor};
}

}  // namespace

std::vector<std::string> realization_names() {
  return {"twisted_affine", "twisted_affine_plain",
          "gl_homogeneous", "gl_principal",
          "trig_A",         "trig_B",
          "unitary",        "o2N",
          "o2N_twisted"};
}

RealizationPreset realization_preset(const std::string& name, int N) {
  RealizationPreset p;
  p.name = name;
  p.N = N;
  if (name == "twisted_affine") {
    // sign-flip twist of the rank-one root lattice, no group part
    QuadrupleSpec s = a_series(2, 2, 0, 0);
    p.spec = s;
    p.opts.tkind = TKind::QuotientP2P;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    p.opts.eta_overrides = std::vector<long long>{0};
    return p;
  }
  if (name == "twisted_affine_plain") {
    QuadrupleSpec s = a_series(2, 1, 0, 0);
    p.spec = s;
    p.opts.tkind = TKind::GroupAlgebraQ;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    return p;
  }
  if (name == "gl_homogeneous") {
    QuadrupleSpec s = a_series(N, 1, 1, 0);
    p.spec = s;
    p.opts.tkind = TKind::GroupAlgebraQ;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    return p;
  }
  if (name == "gl_principal") {
    QuadrupleSpec s = coxeter(N, 1, 0);
    int m0 = s.m % 2 == 0 ? s.m : 2 * s.m;
    s.conductor = std::lcm(2 * N, m0);
    p.spec = s;
    p.opts.tkind = TKind::Trivial;
    p.opts.epsC_overrides = std::vector<std::vector<long long>>(
        s.q_basis.size(), std::vector<long long>(s.q_basis.size(), 0));
    p.opts.eta_overrides = std::vector<long long>(s.q_basis.size(), 0);
    return p;
  }
  if (name == "trig_A" || name == "trig_B") {
    bool tw = name == "trig_B";
    QuadrupleSpec s{1, {}, {0}, {tw ? -1 : 1}, tw ? 2 : 1, 2, 4};
    p.spec = s;
    p.opts.tkind = TKind::Trivial;
    return p;
  }
  if (name == "unitary") {
    QuadrupleSpec s = a_series(N, 2, 1, 0);
    p.spec = s;
    p.opts.tkind = TKind::QuotientP2P;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    p.opts.eta_overrides = std::vector<long long>(s.q_basis.size(), 0);
    return p;
  }
  if (name == "o2N") {
    QuadrupleSpec s = d_series(N, false, 1, 0);
    p.spec = s;
    p.opts.tkind = TKind::GroupAlgebraQ;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    return p;
  }
  if (name == "o2N_twisted") {
    QuadrupleSpec s = d_series(N, true, 1, 4);  // fourth roots for the
    p.spec = s;                                 // diagonal conjugation
    p.opts.tkind = TKind::QuotientP2ZeN;
    p.opts.epsC_overrides = eps_star_overrides(Quadruple(s));
    return p;
  }
  throw std::invalid_argument("unknown realization: " + name);
}

namespace {

int eps_star_letters(int i, int j) { return i <= j ? 1 : -1; }

// rewrite a spanning label into a form satisfying pred, with the exact factor
std::optional<std::pair<GenKey, Scalar>> express_as(
    const Model& M, const GenKey& k, const std::function<bool(const GenKey&)>& pred) {
  auto orbit = generator_orbit(M, k);
  if (!orbit) return std::nullopt;
  for (const auto& [kk, f] : *orbit)
    if (pred(kk)) return std::make_pair(kk, f);
  return std::nullopt;
}

struct Dictionary {
  std::shared_ptr<Oracle> oracle;
  std::function<OElem(const GenKey&)> map_key;  // image of one spanning label
  Scalar central_image;                         // image of the central element

  OElem map_elem(const Model& M, const LieElement& x) const {
    OElem r;
    r.add_central(Scalar::zero(M.field()));
    for (const auto& [k, v] : x.terms()) r = r + map_key(k).scaled(v);
    if (x.central().num().field() != nullptr)
      r.add_central(x.central() * central_image);
    return r;
  }
};

Dictionary make_dictionary(const std::string& name, int N, const Model& M) {
  const KFieldPtr& K = M.field();
  Dictionary d;
  d.central_image = Scalar::one(K);
  auto plus_plus = [](const GenKey& k) {
    return k.j.a.sgn > 0 && k.j.b.sgn > 0;
  };

  if (name == "twisted_affine" || name == "twisted_affine_plain") {
    auto oracle = std::make_shared<AffineOracle>(M);
    d.oracle = oracle;
    d.map_key = [&M, oracle](const GenKey& k) {
      OElem r;
      auto ex = express_as(M, k, [](const GenKey& kk) { return kk.j.a.sgn > 0; });
      if (!ex) return r;
      const auto& [kk, f] = *ex;
      const Quadruple& q = *M.quad;
      // the image is the projected loop element at mode n
      if (kk.j.a == kk.j.b) {
        IntVec e(static_cast<size_t>(q.N()), 0);
        e[kk.j.a.idx] = 1;
        IntVec x = e;
        for (int p = 0; p < q.m(); ++p) {
          Cyclotomic w = q.omega_pow(-kk.n * p);
          for (int u = 0; u < q.N(); ++u)
            if (x[u] != 0)
              oracle->add(r, OKey{u, kk.n},
                          f * Scalar::from_cyclo(
                                  M.field(),
                                  w * Cyclotomic::from_rat(
                                          M.field()->cyclo,
                                          Rat(static_cast<long>(x[u]),
                                              static_cast<unsigned long>(q.m())))));
          x = q.nu(x, 1);
        }
      } else {
        IntVec alpha = q.jkey_vec(kk.j);
        IntVec cur = alpha;
        for (int p = 0; p < q.m(); ++p) {
          Cyclotomic w = q.omega_pow(-kk.n * p) * M.eta->eta(p, alpha);
          oracle->add(r, OKey{q.N() + oracle->root_index(cur), kk.n},
                      f * Scalar::from_cyclo(
                              M.field(),
                              w * Cyclotomic::from_rat(
                                      M.field()->cyclo,
                                      Rat(1, static_cast<unsigned long>(q.m())))));
          cur = q.nu(cur, 1);
        }
      }
      return r;
    };
    return d;
  }

  if (name == "gl_homogeneous") {
    auto oracle = std::make_shared<GlOracle>(K, M.quad->gamma_rank());
    d.oracle = oracle;
    d.map_key = [&M, oracle](const GenKey& k) {
      OElem r;
      auto ex = express_as(M, k, [](const GenKey& kk) {
        return kk.j.a.sgn > 0 && kk.j.b.sgn > 0;
      });
      if (!ex) return r;
      const auto& [kk, f] = *ex;
      int i = kk.j.a.idx, j = kk.j.b.idx;
      Scalar sign = Scalar::from_rat(M.field(), Rat(eps_star_letters(i, j)));
      oracle->add(r, oracle->key(i, j, kk.n, kk.c), f * sign);
      return r;
    };
    return d;
  }

  if (name == "gl_principal") {
    auto oracle = std::make_shared<PrincipalOracle>(K, N, M.quad);
    d.oracle = oracle;
    d.map_key = [&M, oracle, N](const GenKey& k) {
      OElem r;
      auto ex = express_as(M, k, [](const GenKey& kk) {
        return kk.j.a.sgn > 0 && kk.j.b.sgn > 0 && kk.j.b.idx == 0;
      });
      if (!ex) return r;
      const auto& [kk, f] = *ex;
      const Quadruple& q = *M.quad;
      int w = kk.j.a.idx;  // 0-based letter, pairs with the first letter
      long long ibar = w == 0 ? N : N - w;
      // generator = (1/N) zeta(eps_w - eps_1) (1 - omega^{-i})^{1 - [ibar=N]}
      //             times the target basis element
      Scalar coeff = Scalar::from_rat(M.field(), Rat(1, static_cast<unsigned long>(N)));
      IntVec diff(static_cast<size_t>(q.N()), 0);
      if (w != 0) {
        diff[w] = 1;
        diff[0] = -1;
        coeff = coeff * Scalar::from_cyclo(M.field(), zeta_const(q, diff));
      }
      Scalar base = Scalar::one(M.field()) -
                    Scalar::from_cyclo(M.field(), q.omega_pow(-ibar));
      coeff = coeff * base.pow(ibar == N ? 0 : 1);
      oracle->add(r, oracle->key(ibar, kk.n, kk.c), f * coeff);
      return r;
    };
    return d;
  }

  if (name == "trig_A" || name == "trig_B") {
    bool tw = name == "trig_B";
    auto oracle = std::make_shared<TrigOracle>(K, tw);
    d.oracle = oracle;
    d.map_key = [&M, oracle, tw](const GenKey& k) {
      OElem r;
      auto ex = express_as(M, k, [](const GenKey& kk) { return kk.j.a.sgn > 0; });
      if (!ex) return r;
      const auto& [kk, f] = *ex;
      // element = s^{-n v} (1/2 for the twisted series) times the basis label
      Scalar coeff = Scalar::q_power_half(M.field(), kk.c, -kk.n);
      if (tw) coeff = coeff * Scalar::from_rat(M.field(), Rat(1, 2));
      oracle->add(r, oracle->key(kk.n, kk.c), f * coeff);
      return r;
    };
    return d;
  }

  if (name == "unitary") {
    auto oracle = std::make_shared<UnitaryOracle>(K);
    d.oracle = oracle;
    d.map_key = [&M, oracle](const GenKey& k) {
      OElem r;
      auto ex = express_as(M, k, [](const GenKey& kk) {
        return kk.j.a.sgn > 0 && kk.j.b.sgn > 0;
      });
      if (!ex) return r;
      const auto& [kk, f] = *ex;
      int i = kk.j.a.idx, j = kk.j.b.idx;
      Scalar coeff = Scalar::from_rat(M.field(), Rat(eps_star_letters(i, j), 2));
      oracle->add(r, oracle->key(i, j, kk.n, kk.c), f * coeff);
      return r;
    };
    return d;
  }

  if (name == "o2N") {
    auto oracle = std::make_shared<SignedOracle>(K);
    d.oracle = oracle;
    d.map_key = [&M, oracle](const GenKey& k) {
      OElem r;
      Scalar sign = Scalar::from_rat(M.field(),
                                     Rat(eps_star_letters(k.j.a.idx, k.j.b.idx)));
      oracle->add(r,
                  oracle->key(k.j.a.sgn, k.j.a.idx, k.j.b.sgn, k.j.b.idx, k.n,
                              k.c),
                  sign);
      return r;
    };
    return d;
  }

  if (name == "o2N_twisted") {
    auto oracle = std::make_shared<SignedOracle>(K);
    d.oracle = oracle;
    d.central_image = Scalar::from_rat(K, Rat(2));
    d.map_key = [&M, oracle, N](const GenKey& k) {
      const KFieldPtr& KK = M.field();
      const Quadruple& q = *M.quad;
      OElem r;
      // diagonal conjugation weights: the last letter carries a fourth root
      auto delta = [&](const SignedIndex& s) {
        if (s.idx != N - 1) return Scalar::one(KK);
        return Scalar::from_cyclo(
            KK, Cyclotomic::zeta_power(KK->cyclo,
                                       s.sgn > 0 ? q.conductor() / 4
                                                 : -q.conductor() / 4));
      };
      Scalar coeff =
          Scalar::from_rat(KK, Rat(eps_star_letters(k.j.a.idx, k.j.b.idx), 2)) *
          delta(k.j.a) / delta(k.j.b);
      SignedIndex a1 = q.nu_signed(k.j.a, 1);
      SignedIndex b1 = q.nu_signed(k.j.b, 1);
      oracle->add(r,
                  oracle->key(k.j.a.sgn, k.j.a.idx, k.j.b.sgn, k.j.b.idx, k.n,
                              k.c),
                  coeff);
      Scalar second = k.n % 2 == 0 ? coeff : -coeff;
      oracle->add(r, oracle->key(a1.sgn, a1.idx, b1.sgn, b1.idx, k.n, k.c),
                  second);
      return r;
    };
    return d;
  }

  throw std::invalid_argument("no dictionary for " + name);
}

std::vector<GenKey> canonical_keys(const Model& M, int exp_window,
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

std::vector<FockVector> sweep_vectors(const Model& M, std::mt19937_64& rng,
                                      int count, int max_deg) {
  std::vector<FockVector> out;
  auto labels = M.T->labels(1);
  for (const auto& l : labels) {
    out.push_back(FockVector::basis(FockKey{l, {}}, Scalar::one(M.field())));
    if (static_cast<int>(out.size()) >= count) break;
  }
  std::uniform_int_distribution<size_t> pl(0, labels.size() - 1);
  std::uniform_int_distribution<int> deg(1, std::max(1, max_deg));
  std::uniform_int_distribution<int> rep(0, M.quad->N() - 1);
  while (static_cast<int>(out.size()) < count) {
    FockVector v =
        FockVector::basis(FockKey{labels[pl(rng)], {}}, Scalar::one(M.field()));
    int budget = deg(rng);
    int guard = 0;
    while (budget > 0 && guard++ < 20) {
      std::uniform_int_distribution<int> part(1, budget);
      int p = part(rng);
      FockVector w = heisenberg_apply(*M.hb, rep(rng), -p, v);
      if (!w.is_zero()) {
        v = w;
        budget -= p;
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<CheckOutcome> verify_realization(const std::string& name, int N,
                                             const RealizationSweep& sweep) {
  std::vector<CheckOutcome> out;
  RealizationPreset preset = realization_preset(name, N);
  auto push = [&](const std::string& id, bool pass, const std::string& w = "") {
    out.push_back({name + "/" + id, pass ? 0 : 1, w});
  };

  AssumptionReport arep = check_assumptions(preset.spec);
  push("assumptions", arep.all_pass(), arep.all_pass() ? "" : arep.to_string());
  if (!arep.all_pass()) return out;

  Model M = build_model(preset.spec, preset.opts);
  auto crep = check_compatibility(*M.quad, *M.epsC, *M.T, *M.eta);
  push("compatibility", crep.all_pass(), crep.all_pass() ? "" : crep.to_string());

  SpanCondition sc = span_condition(*M.quad);
  bool span_ok = M.quad->gamma_rank() == 0 ? sc.roots_span : sc.unit_pairs_span;
  push("span-hypothesis", span_ok);

  Dictionary dict = make_dictionary(name, N, M);
  auto keys = canonical_keys(M, sweep.exp_window, sweep.mode_window);

  // (a) the dictionary transports the closed-form bracket to the target
  {
    bool ok = true;
    std::string witness;
    for (size_t a = 0; a < keys.size() && ok; ++a)
      for (size_t b = a; b < keys.size() && ok; ++b) {
        OElem lhs = dict.oracle->bracket(dict.map_key(keys[a]),
                                         dict.map_key(keys[b]));
        OElem rhs = dict.map_elem(M, bracket_pair(M, keys[a], keys[b]));
        if (!(lhs == rhs)) {
          ok = false;
          witness = keys[a].to_string() + " , " + keys[b].to_string();
        }
      }
    push("dictionary-bracket", ok, witness);
  }

  // (b) operator commutators on sampled vectors
  {
    std::mt19937_64 rng(sweep.seed);
    auto vs = sweep_vectors(M, rng, 3, sweep.max_degree);
    std::uniform_int_distribution<size_t> pk(0, keys.size() - 1);
    std::uniform_int_distribution<size_t> pv(0, vs.size() - 1);
    bool ok = true;
    std::string witness;
    int done = 0;
    int guard = 0;
    while (done < sweep.samples && guard++ < 50 * sweep.samples) {
      const GenKey& k1 = keys[pk(rng)];
      const GenKey& k2 = keys[pk(rng)];
      if (k1.c == k2.c && exp_is_zero(exp_add(k1.c, k2.c)) && !exp_is_zero(k1.c))
        continue;
      auto chk = verify_theorem(M, k1, k2, vs[pv(rng)]);
      if (!chk.pass) {
        ok = false;
        witness = k1.to_string() + " , " + k2.to_string();
        break;
      }
      ++done;
    }
    push("operator-commutators", ok && done == sweep.samples, witness);
  }

  if (name == "gl_principal") {
    // mode-level composition identity for the rescaled generators
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(sweep.seed + 1);
    auto vs = sweep_vectors(M, rng, 2, sweep.max_degree);
    const Quadruple& q = *M.quad;
    const KFieldPtr& K = M.field();
    auto y_gen = [&](long long i, const ExpVec& v, long long n0,
                     const FockVector& x) {
      // y^i(v, n0) = N zeta(eps_w - eps_1)^{-1} (1-w^{-i})^{[ibar=N]-1} y_{w,1}
      long long ibar = ((i % N) + N) % N == 0 ? N : ((i % N) + N) % N;
      int w = static_cast<int>((N - ibar) % N);
      Scalar coeff = Scalar::from_rat(K, Rat(static_cast<long>(N)));
      if (w != 0) {
        IntVec diff(static_cast<size_t>(q.N()), 0);
        diff[w] = 1;
        diff[0] = -1;
        coeff = coeff / Scalar::from_cyclo(K, zeta_const(q, diff));
      }
      Scalar base =
          Scalar::one(K) - Scalar::from_cyclo(K, q.omega_pow(-ibar));
      coeff = coeff * base.pow(ibar == N ? 0 : -1);
      VertexOpSpec spec = VertexOpSpec::make(M, JKey{{w, 1}, {0, 1}}, v);
      return apply_mode(M, spec, n0, x).scaled(coeff);
    };
    for (long long i = -N; i <= N && ok; ++i)
      for (long long j = -N; j <= N && ok; ++j)
        for (long long n1 = -sweep.mode_window; n1 <= sweep.mode_window && ok; ++n1)
          for (long long n2 = -sweep.mode_window; n2 <= sweep.mode_window && ok;
               ++n2) {
            ExpVec u{1}, v{-1};
            const FockVector& x = vs[static_cast<size_t>((i + j + n1 + n2) & 1)];
            FockVector lhs = y_gen(i, u, n1, y_gen(j, v, n2, x)) -
                             y_gen(j, v, n2, y_gen(i, u, n1, x));
            // modes of the composition law
            FockVector rhs =
                y_gen(i + j, exp_add(u, v), n1 + n2, x)
                    .scaled(Scalar::from_cyclo(K, q.omega_pow(j * n1)) *
                            Scalar::q_monomial(K, u).pow(n2)) -
                y_gen(i + j, exp_add(u, v), n1 + n2, x)
                    .scaled(Scalar::from_cyclo(K, q.omega_pow(i * n2)) *
                            Scalar::q_monomial(K, v).pow(n1));
            long long ij = ((i + j) % N + N) % N;
            if (ij == 0 && n1 + n2 == 0 && exp_is_zero(exp_add(u, v))) {
              Scalar cen = Scalar::from_rat(K, Rat(static_cast<long>(n1))) *
                           Scalar::q_monomial(K, u).pow(-n1) *
                           Scalar::from_cyclo(K, q.omega_pow(j * n1));
              rhs = rhs + x.scaled(cen);
            }
            if (!(lhs == rhs)) {
              ok = false;
              witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                        " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
            }
          }
    push("mode-composition", ok, witness);
  }

  if (name == "o2N_twisted") {
    // the images are fixed by the signed involution
    bool ok = true;
    const Quadruple& q = *M.quad;
    for (const auto& k : keys) {
      OElem img = dict.map_key(k);
      OElem starred;
      starred.add_central(Scalar::zero(M.field()));
      for (const auto& [okey, v] : img.t) {
        SignedIndex A{static_cast<int>(okey[1]), static_cast<int>(okey[0])};
        SignedIndex B{static_cast<int>(okey[3]), static_cast<int>(okey[2])};
        SignedIndex A1 = q.nu_signed(A, 1), B1 = q.nu_signed(B, 1);
        long long n = okey[4];
        OKey nk{A1.sgn, A1.idx, B1.sgn, B1.idx, n};
        for (size_t t = 5; t < okey.size(); ++t) nk.push_back(okey[t]);
        Scalar f = n % 2 == 0 ? v : -v;
        dict.oracle->add(starred, nk, f);
      }
      OElem diff = starred - img;
      if (!diff.is_zero()) {
        ok = false;
        break;
      }
    }
    push("fixed-point-relation", ok);

    // parity components of the label lattice stay invariant under the modes
    bool inv = true;
    std::mt19937_64 rng(sweep.seed + 2);
    auto vs = sweep_vectors(M, rng, 4, sweep.max_degree);
    std::uniform_int_distribution<size_t> pk(0, keys.size() - 1);
    for (int t = 0; t < sweep.samples && inv; ++t) {
      const GenKey& k = keys[pk(rng)];
      for (const auto& v : vs) {
        for (const auto& [fk, coeff] : v.terms()) {
          long long par = 0;
          for (long long x : fk.label) par += x;
          FockVector single = FockVector::basis(fk, coeff);
          FockVector img = apply_mode(M, VertexOpSpec::make(M, k), k.n, single);
          for (const auto& [ok2, c2] : img.terms()) {
            long long par2 = 0;
            for (long long x : ok2.label) par2 += x;
            if (((par - par2) % 2 + 2) % 2 != 0) inv = false;
          }
        }
      }
    }
    push("component-invariance", inv);
  }

  return out;
}

}  // namespace tglie
