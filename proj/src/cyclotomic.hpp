#ifndef TGLIE_CYCLOTOMIC_HPP
#define TGLIE_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace tglie {

using Rat = mpq_class;

/// Coefficients of the L-th cyclotomic polynomial, ascending degree, monic.
/// Computed by exact division of x^L - 1 by the product of all lower Phi_d.
std::vector<Rat> cyclotomic_polynomial(int L);

/// The field Q(zeta_L), represented as Q[x]/Phi_L(x).
class CycloField {
 public:
  explicit CycloField(int L);

  int conductor() const { return L_; }
  int degree() const { return deg_; }
  const std::vector<Rat>& modulus() const { return phi_; }

  // remainder of x^k mod Phi_L for k in [0, 2*deg-2]
  const std::vector<Rat>& power_residue(int k) const { return pow_res_[k]; }

 private:
  int L_;
  int deg_;
  std::vector<Rat> phi_;
  std::vector<std::vector<Rat>> pow_res_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr make_cyclo_field(int L);

class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(CycloFieldPtr fld, std::vector<Rat> coeffs);

  static Cyclotomic zero(const CycloFieldPtr& fld);
  static Cyclotomic one(const CycloFieldPtr& fld);
  static Cyclotomic from_rat(const CycloFieldPtr& fld, const Rat& r);
  /// zeta_L^k, any integer k
  static Cyclotomic zeta_power(const CycloFieldPtr& fld, long long k);

  const CycloFieldPtr& field() const { return fld_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_part() const;  // constant coefficient (exact value when is_rational)

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero
  Cyclotomic pow(long long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  CycloFieldPtr fld_;
  std::vector<Rat> c_;
};

}  // namespace tglie

#endif
