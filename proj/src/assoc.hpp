#ifndef TGLIE_ASSOC_HPP
#define TGLIE_ASSOC_HPP

#include <functional>
#include <tuple>

#include "scalars.hpp"

namespace tglie {

/// Finite-dimensional associative algebra with an anti-involution, an
/// invariant symmetric form and a finite-order automorphism, given by exact
/// structure data over Q(zeta_L).
class InvolutiveAlgebra {
 public:
  using SparseVec = std::vector<std::pair<int, Cyclotomic>>;

  InvolutiveAlgebra(KFieldPtr fld, int dim, int order);

  const KFieldPtr& field() const { return fld_; }
  int dim() const { return dim_; }
  int order() const { return order_; }
  Cyclotomic omega_pow(long long k) const;

  void set_product(int a, int b, SparseVec v);
  void set_tau(int a, SparseVec v);
  void set_theta(int a, SparseVec v);
  void set_form(int a, int b, Cyclotomic v);

  const SparseVec& product(int a, int b) const { return mult_[a][b]; }
  const SparseVec& tau(int a) const { return tau_[a]; }
  const SparseVec& theta(int a) const { return theta_[a]; }
  const Cyclotomic& form(int a, int b) const { return form_[a][b]; }

  SparseVec apply_tau(const SparseVec& v) const;
  SparseVec apply_theta(const SparseVec& v) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  Cyclotomic pair(const SparseVec& x, const SparseVec& y) const;
  /// m^{-1} sum_p omega^{-np} theta^p(x)
  SparseVec project(const SparseVec& x, long long n) const;

  /// tau / theta as single-basis-element maps, when they are monomial
  std::optional<std::pair<int, Cyclotomic>> tau_monomial(int a) const;
  std::optional<std::pair<int, Cyclotomic>> theta_monomial(int a) const;

  struct ValidationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
    std::string to_string() const;
  };
  ValidationReport validate() const;

 private:
  KFieldPtr fld_;
  int dim_;
  int order_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<SparseVec> tau_, theta_;
  std::vector<std::vector<Cyclotomic>> form_;
};

/// Spanning-element label: a basis index with a group-element exponent and a
/// loop mode.
struct AssocKey {
  int a;
  ExpVec c;
  long long n;
  friend bool operator==(const AssocKey&, const AssocKey&) = default;
  friend auto operator<=>(const AssocKey&, const AssocKey&) = default;
};

/// Element of the twisted loop algebra in raw tensor coordinates: a finite
/// combination of e_a (x) t^n T_c plus a central coefficient.
class AssocElement {
 public:
  AssocElement() = default;

  const std::map<AssocKey, Scalar>& raw() const { return t_; }
  const Scalar& central() const { return central_; }
  bool is_zero() const;

  void add_raw(const AssocKey& k, const Scalar& v);
  void add_central(const Scalar& v);

  AssocElement operator+(const AssocElement& o) const;
  AssocElement operator-(const AssocElement& o) const;
  AssocElement scaled(const Scalar& s) const;
  bool operator==(const AssocElement& o) const;

  std::string to_string() const;

 private:
  std::map<AssocKey, Scalar> t_;
  Scalar central_;
};

/// The symmetrized spanning element attached to basis index a: the raw
/// expansion of a(c,n) + involution(a(c,n)) with projections expanded.
AssocElement assoc_generator(const InvolutiveAlgebra& A, int a, const ExpVec& c,
                             long long n);

/// Lie bracket with the loop multiplication and the invariant central term,
/// computed in raw coordinates.
AssocElement bracket_from_definition(const InvolutiveAlgebra& A,
                                     const AssocElement& x,
                                     const AssocElement& y);

struct AssocCanon {
  bool zero = false;
  AssocKey key;
  Scalar factor;  // element(input) = factor * element(key)
};

/// Deterministic representative of a spanning label under the symmetrization
/// flip and the automorphism eigen-relations; requires monomial tau/theta.
AssocCanon canonicalize_assoc(const InvolutiveAlgebra& A, const AssocKey& key);

/// Expansion of a raw fixed-subalgebra element over canonical spanning
/// labels (each raw coefficient contributes half of a spanning element).
std::pair<std::map<AssocKey, Scalar>, Scalar> tilde_decompose(
    const InvolutiveAlgebra& A, const AssocElement& x);

// ---- catalog -------------------------------------------------------------

/// matrix pair algebra M_N (+) M_N^op with the exchange involution
InvolutiveAlgebra make_matrix_pair_algebra(int N, const KFieldPtr& K,
                                           bool transpose_twist);
/// two-line commutative algebra with the exchange involution
InvolutiveAlgebra make_two_line_algebra(const KFieldPtr& K, bool twisted);
/// full matrix algebra on signed indices with the signed-transpose involution
InvolutiveAlgebra make_signed_matrix_algebra(int N, const KFieldPtr& K);

struct CatalogAlgebra {
  std::string name;
  InvolutiveAlgebra algebra;
  /// named generators of the presented Lie algebra, mapped to elements
  std::function<AssocElement(const std::vector<long long>&, const ExpVec&,
                             long long)>
      generator;  // (indices, group exponent, mode) -> element
};

/// name in {gl_quantum_torus, unitary, trigonometric_A, trigonometric_B,
/// bc_graded_o2N}; params: N where applicable; gamma_rank fixes the scalar
/// context.  Throws on unknown names.
CatalogAlgebra catalog_algebra(const std::string& name, int N, int gamma_rank);

}  // namespace tglie

#endif
