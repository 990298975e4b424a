#include "cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tglie {

namespace {

// dense univariate polynomials over Q, ascending coefficients
using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// quotient of exact division; throws if remainder nonzero
Poly divide_exact(Poly num, const Poly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size()) {
    Rat f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
    if (num.size() >= den.size() && num.empty()) break;
  }
  if (!num.empty()) throw std::domain_error("polynomial division not exact");
  trim(q);
  return q;
}

// num mod den (den monic not required)
Poly remainder(Poly num, const Poly& den) {
  while (num.size() >= den.size()) {
    Rat f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    trim(num);
  }
  return num;
}

}  // namespace

namespace {
std::vector<Rat> cyclotomic_polynomial_locked(int L);
}

std::vector<Rat> cyclotomic_polynomial(int L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_polynomial: L >= 1 required");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_polynomial_locked(L);
}

namespace {
std::vector<Rat> cyclotomic_polynomial_locked(int L) {
  static std::map<int, Poly> cache;
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  Poly x_to_L_minus_1(L + 1, Rat(0));
  x_to_L_minus_1[0] = Rat(-1);
  x_to_L_minus_1[L] = Rat(1);
  Poly den{Rat(1)};
  for (int d = 1; d < L; ++d)
    if (L % d == 0) den = mul(den, cyclotomic_polynomial_locked(d));
  Poly phi = divide_exact(x_to_L_minus_1, den);
  cache[L] = phi;
  return phi;
}
}  // namespace

CycloField::CycloField(int L) : L_(L) {
  phi_ = cyclotomic_polynomial(L);
  deg_ = static_cast<int>(phi_.size()) - 1;
  // residues of x^k for k up to 2*deg-2 (enough for schoolbook products)
  int top = deg_ > 0 ? 2 * deg_ - 1 : 1;
  pow_res_.resize(top);
  for (int k = 0; k < top; ++k) {
    Poly xk(k + 1, Rat(0));
    xk[k] = Rat(1);
    Poly r = remainder(xk, phi_);
    r.resize(deg_, Rat(0));
    pow_res_[k] = r;
  }
}

CycloFieldPtr make_cyclo_field(int L) { return std::make_shared<CycloField>(L); }

Cyclotomic::Cyclotomic(CycloFieldPtr fld, std::vector<Rat> coeffs)
    : fld_(std::move(fld)), c_(std::move(coeffs)) {
  c_.resize(fld_->degree(), Rat(0));
}

Cyclotomic Cyclotomic::zero(const CycloFieldPtr& fld) {
  return Cyclotomic(fld, std::vector<Rat>(fld->degree(), Rat(0)));
}

Cyclotomic Cyclotomic::one(const CycloFieldPtr& fld) { return from_rat(fld, Rat(1)); }

Cyclotomic Cyclotomic::from_rat(const CycloFieldPtr& fld, const Rat& r) {
  std::vector<Rat> c(fld->degree(), Rat(0));
  if (fld->degree() > 0) c[0] = r;
  return Cyclotomic(fld, std::move(c));
}

Cyclotomic Cyclotomic::zeta_power(const CycloFieldPtr& fld, long long k) {
  int L = fld->conductor();
  long long kk = ((k % L) + L) % L;
  // x^kk mod Phi_L
  Poly xk(static_cast<size_t>(kk) + 1, Rat(0));
  xk[static_cast<size_t>(kk)] = Rat(1);
  Poly r = remainder(xk, fld->modulus());
  r.resize(fld->degree(), Rat(0));
  return Cyclotomic(fld, std::move(r));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_.empty()) return false;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  std::vector<Rat> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Cyclotomic(fld_, std::move(r));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  std::vector<Rat> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Cyclotomic(fld_, std::move(r));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  return Cyclotomic(fld_, std::move(r));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int d = fld_->degree();
  std::vector<Rat> prod(2 * d - 1 > 0 ? 2 * d - 1 : 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> r(d, Rat(0));
  for (size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& res = fld_->power_residue(static_cast<int>(k));
    for (int i = 0; i < d; ++i) r[i] += prod[k] * res[i];
  }
  return Cyclotomic(fld_, std::move(r));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  // extended Euclid in Q[x] against Phi_L
  Poly a = fld_->modulus();
  Poly b(c_);
  trim(b);
  Poly s0{}, s1{Rat(1)};  // coefficients of b in the Bezout identity
  while (!b.empty()) {
    // a = q*b + r
    Poly r = a, q;
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
    while (r.size() >= b.size() && !r.empty()) {
      Rat f = r.back() / b.back();
      size_t shift = r.size() - b.size();
      q[shift] = f;
      for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
      trim(r);
    }
    Poly s2 = s0;
    {
      Poly qs = mul(q, s1);
      s2.resize(std::max(s2.size(), qs.size()), Rat(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
    }
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
  }
  // a is the gcd (a nonzero constant, Phi_L irreducible), with s0*this = a mod Phi
  if (a.size() != 1) throw std::domain_error("cyclotomic inverse: modulus not coprime");
  Rat inv_gcd = Rat(1) / a[0];
  Poly inv = remainder(s0, fld_->modulus());
  inv.resize(fld_->degree(), Rat(0));
  for (auto& x : inv) x *= inv_gcd;
  return Cyclotomic(fld_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e == 0) return one(fld_);
  Cyclotomic base = e > 0 ? *this : inverse();
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Cyclotomic acc = one(fld_);
  while (k) {
    if (k & 1ULL) acc = acc * base;
    base = base * base;
    k >>= 1ULL;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return c_ == o.c_; }

std::string Cyclotomic::to_string() const {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) s += " + ";
    s += c_[i].get_str();
    if (i > 0) {
      s += "*z";
      if (i > 1) s += "^" + std::to_string(i);
    }
    first = false;
  }
  if (first) s = "0";
  return s;
}

}  // namespace tglie
