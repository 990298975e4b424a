#ifndef TGLIE_SCALARS_HPP
#define TGLIE_SCALARS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace tglie {

/// Exponent vector of a monomial in the half-power generators s_1..s_nvars.
/// A group element q_i corresponds to s_i^2.
using ExpVec = std::vector<int>;

ExpVec exp_zero(int nvars);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_neg(const ExpVec& a);
ExpVec exp_scale(const ExpVec& a, long long k);
bool exp_is_zero(const ExpVec& a);

/// Coefficient field context: Q(zeta_L) adjoined s_1^{±1},..,s_n^{±1}.
struct KField {
  CycloFieldPtr cyclo;
  int nvars;
  KField(CycloFieldPtr c, int n) : cyclo(std::move(c)), nvars(n) {}
};
using KFieldPtr = std::shared_ptr<const KField>;

KFieldPtr make_kfield(int conductor, int nvars);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(KFieldPtr fld) : fld_(std::move(fld)) {}

  static LaurentPoly zero(const KFieldPtr& fld);
  static LaurentPoly one(const KFieldPtr& fld);
  static LaurentPoly constant(const KFieldPtr& fld, const Cyclotomic& c);
  static LaurentPoly monomial(const KFieldPtr& fld, const ExpVec& e,
                              const Cyclotomic& c);

  const KFieldPtr& field() const { return fld_; }
  const std::map<ExpVec, Cyclotomic>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add_term(const ExpVec& e, const Cyclotomic& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Cyclotomic& c) const;
  LaurentPoly shifted(const ExpVec& e) const;  // multiply by monomial s^e

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  /// exponent-wise minimum over the support (monomial content exponent)
  ExpVec content_exponent() const;
  /// largest term under graded-lex order
  std::pair<ExpVec, Cyclotomic> leading_term() const;

  std::string to_string() const;

 private:
  KFieldPtr fld_;
  std::map<ExpVec, Cyclotomic> t_;
};

/// Element of Frac(Q(zeta_L)[s^{±1}]).  Denominators are normalized so the
/// exponent-wise minimum of the support is the zero vector and the leading
/// graded-lex coefficient is 1; fractions are not gcd-reduced, equality is
/// decided by cross-multiplication.
class Scalar {
 public:
  Scalar() = default;
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar zero(const KFieldPtr& fld);
  static Scalar one(const KFieldPtr& fld);
  static Scalar from_rat(const KFieldPtr& fld, const Rat& r);
  static Scalar from_cyclo(const KFieldPtr& fld, const Cyclotomic& c);
  static Scalar from_poly(LaurentPoly p);
  /// s^e (half-power exponents)
  static Scalar s_monomial(const KFieldPtr& fld, const ExpVec& e);
  /// q^v = s^{2v}: a group-element monomial, v in q-units
  static Scalar q_monomial(const KFieldPtr& fld, const ExpVec& qexp);
  /// c^k for a group element c given in q-units, k allowed half-integral
  /// as (num/2): pass twice_k.
  static Scalar q_power_half(const KFieldPtr& fld, const ExpVec& qexp,
                             long long twice_k);
  static Scalar zeta_power(const KFieldPtr& fld, long long k);

  const KFieldPtr& field() const { return num_.field(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;  // throws std::domain_error on zero
  /// integer power; x^0 == 1 for every x, including x == 0
  Scalar pow(long long e) const;

  /// exact equality (cross-multiplication)
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

/// Remap trailing fresh-symbol variables of `expr` into new variables of a
/// larger context.  Variables [0, first_fresh) map identically; fresh slot u
/// maps to the square of target variable bindings[u - first_fresh] (the
/// symbol t becomes the group element q_target = s_target^2).  Throws on
/// colliding or out-of-range bindings.
Scalar substitute_fresh_symbols(const Scalar& expr, int first_fresh,
                                const std::vector<int>& bindings,
                                const KFieldPtr& target);

}  // namespace tglie

#endif
