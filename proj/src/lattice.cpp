#include "lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tglie {

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec vec_neg(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

bool vec_is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

IntLattice::IntLattice(int ambient_dim, const std::vector<IntVec>& generators)
    : dim_(ambient_dim) {
  // row echelon over Z via Euclidean elimination, column by column
  std::vector<IntVec> work = generators;
  for (auto& r : work)
    if (static_cast<int>(r.size()) != dim_)
      throw std::invalid_argument("lattice generator of wrong dimension");
  size_t row = 0;
  for (int col = 0; col < dim_ && row < work.size(); ++col) {
    // gcd-reduce all rows below `row` on this column into a single pivot
    while (true) {
      size_t best = work.size();
      for (size_t r = row; r < work.size(); ++r)
        if (work[r][col] != 0 &&
            (best == work.size() ||
             std::abs(work[r][col]) < std::abs(work[best][col])))
          best = r;
      if (best == work.size()) break;  // column clear
      std::swap(work[row], work[best]);
      bool reduced = true;
      for (size_t r = row + 1; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        long long f = work[r][col] / work[row][col];
        for (int c = 0; c < dim_; ++c) work[r][c] -= f * work[row][c];
        if (work[r][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (work[row][col] != 0) {
      if (work[row][col] < 0)
        for (auto& x : work[row]) x = -x;
      ++row;
    }
  }
  work.resize(row);
  // reduce entries above pivots for a unique normal form
  for (size_t r = work.size(); r-- > 0;) {
    int col = 0;
    while (col < dim_ && work[r][col] == 0) ++col;
    if (col == dim_) continue;
    for (size_t up = 0; up < r; ++up) {
      long long v = work[up][col];
      long long p = work[r][col];
      long long f = (v % p + p) % p;
      long long k = (v - f) / p;
      if (k != 0)
        for (int c = 0; c < dim_; ++c) work[up][c] -= k * work[r][c];
    }
  }
  rows_ = std::move(work);
}

bool IntLattice::contains(const IntVec& v) const {
  IntVec x(v);
  for (const auto& r : rows_) {
    int col = 0;
    while (col < dim_ && r[col] == 0) ++col;
    if (col == dim_) continue;
    if (x[col] % r[col] != 0) continue;
    long long f = x[col] / r[col];
    for (int c = 0; c < dim_; ++c) x[c] -= f * r[c];
  }
  return vec_is_zero(x);
}

bool IntLattice::operator==(const IntLattice& o) const { return rows_ == o.rows_; }

std::string JKey::to_string() const {
  auto part = [](const SignedIndex& s) {
    return std::string(s.sgn > 0 ? "+" : "-") + std::to_string(s.idx + 1);
  };
  return "(" + part(a) + "," + part(b) + ")";
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string vec_str(const IntVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

IntVec apply_nu_once(const QuadrupleSpec& s, const IntVec& v) {
  IntVec r(static_cast<size_t>(s.N), 0);
  for (int i = 0; i < s.N; ++i) r[s.sigma[i]] += s.iota[i] * v[i];
  return r;
}

void check_structure(const QuadrupleSpec& s) {
  require(s.N >= 1, "N must be positive");
  require(static_cast<int>(s.sigma.size()) == s.N, "sigma size mismatch");
  require(static_cast<int>(s.iota.size()) == s.N, "iota size mismatch");
  std::vector<bool> seen(static_cast<size_t>(s.N), false);
  for (int i = 0; i < s.N; ++i) {
    require(s.sigma[i] >= 0 && s.sigma[i] < s.N, "sigma entry out of range");
    require(!seen[s.sigma[i]], "sigma is not a permutation");
    seen[s.sigma[i]] = true;
    require(s.iota[i] == 1 || s.iota[i] == -1, "iota entries must be +-1");
  }
  require(s.m >= 1, "m must be positive");
  require(s.gamma_rank >= 0, "gamma_rank must be nonnegative");
  for (const auto& b : s.q_basis)
    require(static_cast<int>(b.size()) == s.N, "Q_basis vector of wrong dimension");
}

}  // namespace

bool AssumptionReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const AssumptionEntry& e) { return e.pass; });
}

std::string AssumptionReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.id << ": " << (e.pass ? "pass" : "FAIL");
    if (!e.witness.empty()) os << " (witness " << e.witness << ")";
    os << "\n";
  }
  return os.str();
}

AssumptionReport check_assumptions(const QuadrupleSpec& spec) {
  check_structure(spec);
  AssumptionReport rep;
  // A1: the group Gamma is generated by formally independent monomials
  rep.entries.push_back({"A1", true, ""});

  // A2: even lattice, checked on basis vectors and pairwise sums
  {
    bool pass = true;
    std::string witness;
    for (const auto& b : spec.q_basis) {
      if (dot(b, b) % 2 != 0) {
        pass = false;
        witness = vec_str(b);
        break;
      }
    }
    if (pass) {
      for (size_t i = 0; i < spec.q_basis.size() && pass; ++i)
        for (size_t j = i + 1; j < spec.q_basis.size() && pass; ++j) {
          IntVec s = vec_add(spec.q_basis[i], spec.q_basis[j]);
          if (dot(s, s) % 2 != 0) {
            pass = false;
            witness = vec_str(s);
          }
        }
    }
    rep.entries.push_back({"A2", pass, witness});
  }

  // A3: nu preserves Q
  {
    IntLattice Q(spec.N, spec.q_basis);
    bool pass = true;
    std::string witness;
    for (const auto& b : spec.q_basis) {
      IntVec nb = apply_nu_once(spec, b);
      if (!Q.contains(nb)) {
        pass = false;
        witness = vec_str(nb);
        break;
      }
    }
    rep.entries.push_back({"A3", pass, witness});
  }

  // A4: nu^m = Id on P
  {
    bool pass = true;
    std::string witness;
    for (int i = 0; i < spec.N && pass; ++i) {
      IntVec e(static_cast<size_t>(spec.N), 0);
      e[i] = 1;
      IntVec v = e;
      for (int r = 0; r < spec.m; ++r) v = apply_nu_once(spec, v);
      if (v != e) {
        pass = false;
        witness = "eps_" + std::to_string(i + 1);
      }
    }
    rep.entries.push_back({"A4", pass, witness});
  }

  // A5: for even m, <nu^{m/2} alpha, alpha> even on a basis
  {
    bool pass = true;
    std::string witness;
    if (spec.m % 2 == 0) {
      for (const auto& b : spec.q_basis) {
        IntVec v = b;
        for (int r = 0; r < spec.m / 2; ++r) v = apply_nu_once(spec, v);
        if (dot(v, b) % 2 != 0) {
          pass = false;
          witness = vec_str(b);
          break;
        }
      }
    }
    rep.entries.push_back({"A5", pass, witness});
  }
  return rep;
}

Quadruple::Quadruple(const QuadrupleSpec& spec) : spec_(spec) {
  check_structure(spec_);
  AssumptionReport rep = check_assumptions(spec_);
  require(rep.all_pass(), "lattice assumptions fail:\n" + rep.to_string());

  m0_ = spec_.m % 2 == 0 ? spec_.m : 2 * spec_.m;
  L_ = spec_.conductor == 0 ? m0_ : spec_.conductor;
  require(L_ % m0_ == 0, "conductor must be divisible by m0");
  K_ = make_kfield(L_, spec_.gamma_rank);

  ir_table_.assign(static_cast<size_t>(spec_.m),
                   std::vector<SignedIndex>(static_cast<size_t>(spec_.N)));
  for (int i = 0; i < spec_.N; ++i) {
    SignedIndex cur{i, 1};
    for (int r = 0; r < spec_.m; ++r) {
      ir_table_[r][i] = cur;
      cur = SignedIndex{spec_.sigma[cur.idx], cur.sgn * spec_.iota[cur.idx]};
    }
  }

  q_lattice_ = std::make_unique<IntLattice>(spec_.N, spec_.q_basis);

  // reject dependent generator lists: rank over Q must equal the list size
  require(q_lattice_->rank() == static_cast<int>(spec_.q_basis.size()),
          "Q_basis vectors are linearly dependent");
}

IntVec Quadruple::nu(const IntVec& v, int r) const {
  IntVec x(v);
  int rr = ((r % spec_.m) + spec_.m) % spec_.m;
  for (int t = 0; t < rr; ++t) x = apply_nu_once(spec_, x);
  return x;
}

SignedIndex Quadruple::nu_signed(const SignedIndex& s, int r) const {
  int rr = ((r % spec_.m) + spec_.m) % spec_.m;
  SignedIndex base = ir_table_[rr][s.idx];
  return {base.idx, base.sgn * s.sgn};
}

IntVec Quadruple::signed_vec(const SignedIndex& s) const {
  IntVec v(static_cast<size_t>(spec_.N), 0);
  v[s.idx] = s.sgn;
  return v;
}

IntVec Quadruple::jkey_vec(const JKey& j) const {
  return vec_sub(signed_vec(j.a), signed_vec(j.b));
}

IntVec Quadruple::nu_orbit_sum(const IntVec& v) const {
  IntVec acc(static_cast<size_t>(spec_.N), 0);
  IntVec x(v);
  for (int p = 0; p < spec_.m; ++p) {
    acc = vec_add(acc, x);
    x = apply_nu_once(spec_, x);
  }
  return acc;
}

bool Quadruple::in_Q(const IntVec& v) const { return q_lattice_->contains(v); }

std::optional<IntVec> Quadruple::q_coords(const IntVec& v) const {
  size_t k = spec_.q_basis.size();
  if (k == 0) return vec_is_zero(v) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  // solve sum_j x_j basis_j = v over Q by direct elimination
  std::vector<std::vector<Rat>> A(static_cast<size_t>(spec_.N),
                                  std::vector<Rat>(k + 1, Rat(0)));
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < spec_.N; ++i)
      A[i][j] = Rat(static_cast<long>(spec_.q_basis[j][i]));
  for (int i = 0; i < spec_.N; ++i) A[i][k] = Rat(static_cast<long>(v[i]));
  size_t prow = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (size_t col = 0; col < k && prow < A.size(); ++col) {
    size_t piv = prow;
    while (piv < A.size() && A[piv][col] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[prow], A[piv]);
    Rat d = A[prow][col];
    for (size_t c = 0; c <= k; ++c) A[prow][c] /= d;
    for (size_t r = 0; r < A.size(); ++r) {
      if (r == prow) continue;
      Rat f = A[r][col];
      if (f == 0) continue;
      for (size_t c = 0; c <= k; ++c) A[r][c] -= f * A[prow][c];
    }
    pivot_of_col[col] = static_cast<int>(prow);
    ++prow;
  }
  for (size_t r = prow; r < A.size(); ++r)
    if (A[r][k] != 0) return std::nullopt;  // inconsistent
  IntVec coords(k, 0);
  for (size_t col = 0; col < k; ++col) {
    if (pivot_of_col[col] < 0) return std::nullopt;  // dependent basis rejected earlier
    Rat x = A[static_cast<size_t>(pivot_of_col[col])][k];
    if (x.get_den() != 1) return std::nullopt;  // not integral
    coords[col] = x.get_num().get_si();
  }
  return coords;
}

Cyclotomic Quadruple::omega0_pow(long long k) const {
  return Cyclotomic::zeta_power(K_->cyclo, k * (L_ / m0_));
}

Cyclotomic Quadruple::omega_pow(long long k) const {
  return Cyclotomic::zeta_power(K_->cyclo, k * (L_ / spec_.m));
}

std::vector<JKey> Quadruple::enumerate_J() const {
  std::vector<JKey> out;
  for (int i = 0; i < spec_.N; ++i)
    for (int si : {1, -1})
      for (int j = 0; j < spec_.N; ++j)
        for (int sj : {1, -1}) {
          JKey key{{i, si}, {j, sj}};
          if (in_Q(jkey_vec(key))) out.push_back(key);
        }
  return out;
}

long long Quadruple::commutator_exp(const IntVec& alpha, const IntVec& beta) const {
  // (-omega^{-p})^k = omega0^{k*(m0/2 - p*m0/m)}
  long long e = 0;
  IntVec nb(beta);
  for (int p = 0; p < spec_.m; ++p) {
    long long k = dot(alpha, nb);
    e += k * (m0_ / 2 - static_cast<long long>(p) * (m0_ / spec_.m));
    nb = apply_nu_once(spec_, nb);
  }
  return ((e % m0_) + m0_) % m0_;
}

Cyclotomic Quadruple::commutator_C(const IntVec& alpha, const IntVec& beta) const {
  return omega0_pow(commutator_exp(alpha, beta));
}

CocycleTable::CocycleTable(
    QuadruplePtr quad,
    const std::optional<std::vector<std::vector<long long>>>& overrides)
    : quad_(std::move(quad)) {
  size_t k = quad_->q_basis().size();
  e_.assign(k, std::vector<long long>(k, 0));
  const int m0 = quad_->m0();
  for (size_t u = 0; u < k; ++u) {
    long long diag = quad_->commutator_exp(quad_->q_basis()[u], quad_->q_basis()[u]);
    if (diag % m0 != 0)
      throw std::invalid_argument("C(a,a) != 1 on a basis vector: assumptions violated");
  }
  if (overrides) {
    if (overrides->size() != k)
      throw std::invalid_argument("epsilon_C override has wrong shape");
    for (size_t u = 0; u < k; ++u) {
      if ((*overrides)[u].size() != k)
        throw std::invalid_argument("epsilon_C override has wrong shape");
      for (size_t v = 0; v < k; ++v)
        e_[u][v] = (((*overrides)[u][v] % m0) + m0) % m0;
    }
    // alternation must match C on basis pairs
    for (size_t u = 0; u < k; ++u)
      for (size_t v = 0; v < k; ++v) {
        long long alt = ((e_[u][v] - e_[v][u]) % m0 + m0) % m0;
        long long c =
            quad_->commutator_exp(quad_->q_basis()[u], quad_->q_basis()[v]);
        if (alt != c)
          throw std::invalid_argument(
              "epsilon_C override does not realize the commutator function");
      }
  } else {
    // upper-triangular convention: 1 on or above the diagonal, C below
    for (size_t u = 0; u < k; ++u)
      for (size_t v = 0; v < k; ++v)
        e_[u][v] = u > v ? quad_->commutator_exp(quad_->q_basis()[u],
                                                 quad_->q_basis()[v])
                         : 0;
  }
}

long long CocycleTable::epsC_exp(const IntVec& alpha, const IntVec& beta) const {
  auto xa = quad_->q_coords(alpha);
  auto xb = quad_->q_coords(beta);
  if (!xa || !xb) throw std::domain_error("epsilon_C argument outside Q");
  long long e = 0;
  for (size_t u = 0; u < xa->size(); ++u) {
    if ((*xa)[u] == 0) continue;
    for (size_t v = 0; v < xb->size(); ++v) {
      if ((*xb)[v] == 0) continue;
      e += (*xa)[u] * (*xb)[v] * e_[u][v];
    }
  }
  const int m0 = quad_->m0();
  return ((e % m0) + m0) % m0;
}

Cyclotomic CocycleTable::epsC(const IntVec& alpha, const IntVec& beta) const {
  return quad_->omega0_pow(epsC_exp(alpha, beta));
}

long long CocycleTable::eps_prime_exp(const IntVec& alpha, const IntVec& beta) const {
  // prod over -m/2 < p < 0 of (-omega^p)^{<alpha, nu^p beta>}
  const int m = quad_->m();
  const int m0 = quad_->m0();
  long long e = 0;
  for (int p = -(m - 1) / 2; p < 0; ++p) {
    long long k = dot(alpha, quad_->nu(beta, p));
    e += k * (m0 / 2 + static_cast<long long>(p) * (m0 / m));
  }
  return ((e % m0) + m0) % m0;
}

Cyclotomic CocycleTable::eps_prime(const IntVec& alpha, const IntVec& beta) const {
  return quad_->omega0_pow(eps_prime_exp(alpha, beta));
}

long long CocycleTable::eps_exp(const IntVec& alpha, const IntVec& beta) const {
  const int m0 = quad_->m0();
  return (epsC_exp(alpha, beta) + eps_prime_exp(alpha, beta)) % m0;
}

Cyclotomic CocycleTable::eps(const IntVec& alpha, const IntVec& beta) const {
  return quad_->omega0_pow(eps_exp(alpha, beta));
}

Cyclotomic zeta_prime(const Quadruple& q, const IntVec& alpha) {
  Cyclotomic acc = Cyclotomic::one(q.field()->cyclo);
  for (int p = 1; 2 * p < q.m(); ++p) {
    Cyclotomic base = Cyclotomic::one(q.field()->cyclo) - q.omega_pow(p);
    acc = acc * base.pow(dot(alpha, q.nu(alpha, p)));
  }
  return acc;
}

Cyclotomic zeta_const(const Quadruple& q, const IntVec& alpha) {
  Cyclotomic z = zeta_prime(q, alpha);
  if (q.m() % 2 == 0) {
    long long e = dot(alpha, q.nu(alpha, q.m() / 2));
    if (e % 2 != 0) throw std::domain_error("zeta: odd half-turn pairing");
    z = z * Cyclotomic::from_rat(q.field()->cyclo, Rat(2)).pow(e / 2);
  }
  return z;
}

Scalar kappa_const(const Quadruple& q, const JKey& j, const ExpVec& c) {
  const KFieldPtr& K = q.field();
  if (j.a == j.b && exp_is_zero(c))
    throw std::domain_error("kappa undefined for equal signed letters with c = 1");
  Scalar acc = Scalar::one(K);
  IntVec ei = q.signed_vec(j.a);
  for (int p = 0; p < q.m(); ++p) {
    IntVec nej = q.nu(q.signed_vec(j.b), p);
    long long e = dot(ei, nej);
    if (e != 0) {
      Scalar base = Scalar::one(K) -
                    Scalar::q_monomial(K, c) * Scalar::from_cyclo(K, q.omega_pow(p));
      acc = acc * base.pow(-e);
      if (p != 0) {
        Scalar base2 =
            Scalar::one(K) - Scalar::from_cyclo(K, q.omega_pow(p));
        acc = acc * base2.pow(e);
      }
    }
  }
  return acc;
}

int eps_star_sign(const IntVec& alpha, const IntVec& beta) {
  long long e = 0;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (size_t j = 0; j < i; ++j) e += alpha[i] * beta[j];  // pairs with i > j
  return e % 2 == 0 ? 1 : -1;
}

SpanCondition span_condition(const Quadruple& q) {
  IntLattice Q(q.N(), q.q_basis());
  std::vector<IntVec> roots;
  for (int i = 0; i < q.N(); ++i)
    for (int j = i + 1; j < q.N(); ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IntVec v(static_cast<size_t>(q.N()), 0);
          v[i] = si;
          v[j] = sj;
          if (Q.contains(v)) roots.push_back(v);
        }
  std::vector<IntVec> unit_pairs;
  for (const JKey& k : q.enumerate_J()) {
    IntVec v = q.jkey_vec(k);
    if (!vec_is_zero(v)) unit_pairs.push_back(v);
  }
  IntLattice span_roots(q.N(), roots);
  IntLattice span_pairs(q.N(), unit_pairs);
  return {span_roots == Q, span_pairs == Q};
}

}  // namespace tglie
