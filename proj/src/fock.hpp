#ifndef TGLIE_FOCK_HPP
#define TGLIE_FOCK_HPP

#include <map>

#include "lattice.hpp"

namespace tglie {

/// Basis data for the twisted Heisenberg current modes.  For each residue
/// class r mod m, the projections eps_{i,(r)} = m^{-1} sum_p omega^{-rp}
/// nu^p(eps_i) of one representative per sigma-orbit, with vanishing
/// projections dropped.
class HeisenbergBasis {
 public:
  HeisenbergBasis() = default;
  explicit HeisenbergBasis(QuadruplePtr quad);

  struct Elem {
    int rep;                       // orbit representative letter
    std::vector<Cyclotomic> vec;   // projection in Q(zeta_L)^N
  };

  const QuadruplePtr& quad() const { return quad_; }
  int dim(long long residue) const;
  const std::vector<Elem>& basis(long long residue) const;
  /// the projection vector of representative `rep` at this residue, or
  /// nullptr when it vanishes
  const Elem* lookup(int rep, long long residue) const;

  /// expansion of the projection of an integer vector in the residue basis
  std::vector<std::pair<int, Cyclotomic>> decompose(const IntVec& alpha,
                                                    long long residue) const;

  /// bilinear pairing of two projection vectors
  Cyclotomic pairing(const std::vector<Cyclotomic>& x,
                     const std::vector<Cyclotomic>& y) const;

 private:
  QuadruplePtr quad_;
  std::vector<std::vector<Elem>> per_res_;
  std::vector<int> orbit_reps_;
  std::vector<std::vector<int>> orbit_of_rep_;   // letters along each orbit
  std::vector<std::vector<int>> orbit_signs_;    // sign_t(i) along each orbit
  std::vector<int> rep_of_letter_;
  int mod(long long r) const;
};

/// Basis key of the generalized Fock space: a module label and a creation
/// monomial, stored as a sorted multiset of (orbit representative, mode < 0).
struct FockKey {
  IntVec label;
  std::vector<std::pair<int, long long>> mono;
  friend bool operator==(const FockKey&, const FockKey&) = default;
  friend auto operator<=>(const FockKey&, const FockKey&) = default;
  long long degree() const;
  std::string to_string() const;
};

class FockVector {
 public:
  FockVector() = default;

  static FockVector basis(const FockKey& k, const Scalar& coeff);

  bool is_zero() const { return t_.empty(); }
  const std::map<FockKey, Scalar>& terms() const { return t_; }
  long long degree() const;  // max over terms; 0 for the zero vector

  void add_term(const FockKey& k, const Scalar& c);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector scaled(const Scalar& c) const;
  bool operator==(const FockVector& o) const;

  std::string to_string() const;

 private:
  std::map<FockKey, Scalar> t_;
};

/// x(n) for x the projection of orbit representative `rep` at residue n.
/// Creation for n < 0, annihilation for n > 0 (n = 0 rejected).
FockVector heisenberg_apply(const HeisenbergBasis& hb, int rep, long long n,
                            const FockVector& v);

/// Mode action of a current attached to an arbitrary lattice vector:
/// creation/annihilation of alpha_{(n)}(n), with an extra Scalar coefficient.
FockVector current_apply(const HeisenbergBasis& hb, const IntVec& alpha,
                         long long n, const FockVector& v);

/// One exponential factor operand: a lattice vector with a Γ-monomial scale,
/// contributing exp(-sum m alpha_{(n)}(n)/n (scale·z)^{-n}).
struct EOperand {
  IntVec alpha;
  ExpVec scale_qexp;  // group-element scale in q-units (empty scale == 1)
};

/// Expansion of the product of annihilation exponentials over `ops` applied
/// to v: result[e] is the coefficient of z^{-e}, e = 0..bound (descending
/// powers; vanishes beyond the degree of v).
std::vector<FockVector> eplus_expand(const HeisenbergBasis& hb,
                                     const std::vector<EOperand>& ops,
                                     const FockVector& v);

/// Expansion of the product of creation exponentials over `ops` applied to
/// v: result[e] is the coefficient of z^{+e} for e = 0..emax (exact).
std::vector<FockVector> eminus_expand(const HeisenbergBasis& hb,
                                      const std::vector<EOperand>& ops,
                                      const FockVector& v, long long emax);

/// Windowed single-factor evaluation of the exponential at (scale z):
/// returns exponent -> coefficient for |exponent| <= window.
std::map<long long, FockVector> apply_E(const HeisenbergBasis& hb, int sign,
                                        const IntVec& alpha,
                                        const ExpVec& scale_qexp,
                                        const FockVector& v, long long window);

/// Number of creation monomials of total degree d (per the residue dimension
/// generating function).
long long graded_dimension(const HeisenbergBasis& hb, long long d);

}  // namespace tglie

#endif
