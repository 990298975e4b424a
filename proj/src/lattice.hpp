#ifndef TGLIE_LATTICE_HPP
#define TGLIE_LATTICE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace tglie {

using IntVec = std::vector<long long>;

long long dot(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
bool vec_is_zero(const IntVec& a);

/// Hermite-style integer lattice span (row lattice of the generator list).
class IntLattice {
 public:
  explicit IntLattice(int ambient_dim, const std::vector<IntVec>& generators);
  bool contains(const IntVec& v) const;
  bool operator==(const IntLattice& o) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<IntVec> rows_;  // echelon basis, positive pivots
};

/// A letter with a sign: rho * epsilon_idx, idx in [0, N).
struct SignedIndex {
  int idx = 0;
  int sgn = 1;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
  friend auto operator<=>(const SignedIndex& a, const SignedIndex& b) {
    // plus sign sorts first
    if (a.idx != b.idx) return a.idx <=> b.idx;
    return (a.sgn > 0 ? 0 : 1) <=> (b.sgn > 0 ? 0 : 1);
  }
  SignedIndex negated() const { return {idx, -sgn}; }
};

/// Index pair (rho_i i, rho_j j); member of the set J when the difference of
/// the two signed unit vectors lies in Q.
struct JKey {
  SignedIndex a, b;
  friend bool operator==(const JKey&, const JKey&) = default;
  friend auto operator<=>(const JKey&, const JKey&) = default;
  bool diagonal_letters() const { return a.idx == b.idx; }
  std::string to_string() const;
};

struct QuadrupleSpec {
  int N = 1;
  std::vector<IntVec> q_basis;  // independent vectors spanning Q
  std::vector<int> sigma;       // permutation of {0..N-1}
  std::vector<int> iota;        // signs +-1
  int m = 1;
  int gamma_rank = 0;
  int conductor = 0;  // 0: derive minimal valid conductor
};

struct AssumptionEntry {
  std::string id;
  bool pass;
  std::string witness;  // empty when passing
};

struct AssumptionReport {
  std::vector<AssumptionEntry> entries;
  bool all_pass() const;
  std::string to_string() const;
};

/// Validates the raw data without building derived tables.
AssumptionReport check_assumptions(const QuadrupleSpec& spec);

class Quadruple {
 public:
  /// Throws std::invalid_argument when structurally malformed or when the
  /// lattice assumptions fail.
  explicit Quadruple(const QuadrupleSpec& spec);

  int N() const { return spec_.N; }
  int m() const { return spec_.m; }
  int m0() const { return m0_; }
  int gamma_rank() const { return spec_.gamma_rank; }
  int conductor() const { return L_; }
  const std::vector<IntVec>& q_basis() const { return spec_.q_basis; }
  const KFieldPtr& field() const { return K_; }

  IntVec nu(const IntVec& v, int r = 1) const;
  SignedIndex nu_signed(const SignedIndex& s, int r) const;  // the index i_r
  IntVec signed_vec(const SignedIndex& s) const;             // rho * eps_i
  IntVec jkey_vec(const JKey& j) const;  // rho_i eps_i - rho_j eps_j

  /// Sum of nu^p(v) over p in Z_m (an invariant integer vector).
  IntVec nu_orbit_sum(const IntVec& v) const;

  bool in_Q(const IntVec& v) const;
  /// coordinates in the Q-basis; nullopt when not a lattice member
  std::optional<IntVec> q_coords(const IntVec& v) const;

  Cyclotomic omega0_pow(long long k) const;  // primitive m0-th root power
  Cyclotomic omega_pow(long long k) const;   // primitive m-th root power

  std::vector<JKey> enumerate_J() const;

  /// omega0-exponent of C(alpha,beta) = prod_p (-omega^{-p})^{<alpha,nu^p beta>}
  long long commutator_exp(const IntVec& alpha, const IntVec& beta) const;
  Cyclotomic commutator_C(const IntVec& alpha, const IntVec& beta) const;

  const std::vector<int>& sigma() const { return spec_.sigma; }
  const std::vector<int>& iota() const { return spec_.iota; }

 private:
  QuadrupleSpec spec_;
  int m0_;
  int L_;
  KFieldPtr K_;
  std::vector<std::vector<SignedIndex>> ir_table_;  // [r][i]
  std::unique_ptr<IntLattice> q_lattice_;
};

using QuadruplePtr = std::shared_ptr<const Quadruple>;

/// Two-cocycle tables on Q: eps_C (bimultiplicative, built from a basis with
/// the upper-triangular convention or explicit overrides), the half-turn
/// correction eps', and their product eps.
class CocycleTable {
 public:
  CocycleTable() = default;
  /// overrides: optional full matrix of omega0-exponents on the Q-basis.
  CocycleTable(QuadruplePtr quad,
               const std::optional<std::vector<std::vector<long long>>>& overrides);

  long long epsC_exp(const IntVec& alpha, const IntVec& beta) const;
  Cyclotomic epsC(const IntVec& alpha, const IntVec& beta) const;
  long long eps_prime_exp(const IntVec& alpha, const IntVec& beta) const;
  Cyclotomic eps_prime(const IntVec& alpha, const IntVec& beta) const;
  long long eps_exp(const IntVec& alpha, const IntVec& beta) const;
  Cyclotomic eps(const IntVec& alpha, const IntVec& beta) const;

  const std::vector<std::vector<long long>>& basis_exps() const { return e_; }

 private:
  QuadruplePtr quad_;
  std::vector<std::vector<long long>> e_;  // omega0-exponents on basis pairs
};

/// zeta'(alpha) = prod_{0<p<m/2} (1-omega^p)^{<alpha,nu^p alpha>}
Cyclotomic zeta_prime(const Quadruple& q, const IntVec& alpha);
/// zeta(alpha): zeta' with the extra 2^{<alpha,nu^{m/2} alpha>/2} factor for even m
Cyclotomic zeta_const(const Quadruple& q, const IntVec& alpha);
/// kappa(rho_i i, rho_j j, c); c in q-units.  Throws std::domain_error on the
/// excluded diagonal case (equal signed letters with c == 1).
Scalar kappa_const(const Quadruple& q, const JKey& j, const ExpVec& c);

/// The sign cocycle on P used by the catalog presets:
/// eps*(eps_i,eps_j) = 1 for i <= j and -1 otherwise, extended bimultiplicatively.
int eps_star_sign(const IntVec& alpha, const IntVec& beta);

struct SpanCondition {
  bool roots_span;         // Q' = {alpha : <alpha,alpha> = 2} spans Q
  bool unit_pairs_span;    // Q'' = {rho_i eps_i - rho_j eps_j} ∩ Q spans Q
};
SpanCondition span_condition(const Quadruple& q);

}  // namespace tglie

#endif
