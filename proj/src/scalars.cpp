#include "scalars.hpp"

#include <numeric>
#include <stdexcept>

namespace tglie {

ExpVec exp_zero(int nvars) { return ExpVec(static_cast<size_t>(nvars), 0); }

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ExpVec exp_neg(const ExpVec& a) {
  ExpVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

ExpVec exp_scale(const ExpVec& a, long long k) {
  ExpVec r(a);
  for (auto& x : r) x = static_cast<int>(x * k);
  return r;
}

bool exp_is_zero(const ExpVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

KFieldPtr make_kfield(int conductor, int nvars) {
  return std::make_shared<KField>(make_cyclo_field(conductor), nvars);
}

LaurentPoly LaurentPoly::zero(const KFieldPtr& fld) { return LaurentPoly(fld); }

LaurentPoly LaurentPoly::one(const KFieldPtr& fld) {
  return constant(fld, Cyclotomic::one(fld->cyclo));
}

LaurentPoly LaurentPoly::constant(const KFieldPtr& fld, const Cyclotomic& c) {
  return monomial(fld, exp_zero(fld->nvars), c);
}

LaurentPoly LaurentPoly::monomial(const KFieldPtr& fld, const ExpVec& e,
                                  const Cyclotomic& c) {
  LaurentPoly p(fld);
  if (!c.is_zero()) p.t_.emplace(e, c);
  return p;
}

void LaurentPoly::add_term(const ExpVec& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(fld_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(fld_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
  LaurentPoly r(fld_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : t_) {
    Cyclotomic w = v * c;
    if (!w.is_zero()) r.t_.emplace(e, w);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& e) const {
  LaurentPoly r(fld_);
  for (const auto& [e0, v] : t_) r.t_.emplace(exp_add(e0, e), v);
  return r;
}

ExpVec LaurentPoly::content_exponent() const {
  if (t_.empty()) return exp_zero(fld_->nvars);
  ExpVec m = t_.begin()->first;
  for (const auto& [e, c] : t_)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

namespace {
long long total_degree(const ExpVec& e) {
  long long s = 0;
  for (int x : e) s += x;
  return s;
}
bool grlex_less(const ExpVec& a, const ExpVec& b) {
  long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}
}  // namespace

std::pair<ExpVec, Cyclotomic> LaurentPoly::leading_term() const {
  if (t_.empty()) throw std::domain_error("leading_term of zero polynomial");
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) s += " + ";
    s += "(" + c.to_string() + ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) s += "*s" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    first = false;
  }
  return s;
}

Scalar::Scalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
  normalize();
}

void Scalar::normalize() {
  const KFieldPtr& fld = den_.field();
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(fld);
    return;
  }
  ExpVec shift = exp_neg(den_.content_exponent());
  if (!exp_is_zero(shift)) {
    den_ = den_.shifted(shift);
    num_ = num_.shifted(shift);
  }
  Cyclotomic lead = den_.leading_term().second;
  if (!lead.is_one()) {
    Cyclotomic inv = lead.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

Scalar Scalar::zero(const KFieldPtr& fld) {
  return Scalar(LaurentPoly::zero(fld), LaurentPoly::one(fld));
}

Scalar Scalar::one(const KFieldPtr& fld) {
  return Scalar(LaurentPoly::one(fld), LaurentPoly::one(fld));
}

Scalar Scalar::from_rat(const KFieldPtr& fld, const Rat& r) {
  return from_cyclo(fld, Cyclotomic::from_rat(fld->cyclo, r));
}

Scalar Scalar::from_cyclo(const KFieldPtr& fld, const Cyclotomic& c) {
  return Scalar(LaurentPoly::constant(fld, c), LaurentPoly::one(fld));
}

Scalar Scalar::from_poly(LaurentPoly p) {
  KFieldPtr fld = p.field();
  return Scalar(std::move(p), LaurentPoly::one(fld));
}

Scalar Scalar::s_monomial(const KFieldPtr& fld, const ExpVec& e) {
  return Scalar(LaurentPoly::monomial(fld, e, Cyclotomic::one(fld->cyclo)),
                LaurentPoly::one(fld));
}

Scalar Scalar::q_monomial(const KFieldPtr& fld, const ExpVec& qexp) {
  return s_monomial(fld, exp_scale(qexp, 2));
}

Scalar Scalar::q_power_half(const KFieldPtr& fld, const ExpVec& qexp,
                            long long twice_k) {
  return s_monomial(fld, exp_scale(qexp, twice_k));
}

Scalar Scalar::zeta_power(const KFieldPtr& fld, long long k) {
  return from_cyclo(fld, Cyclotomic::zeta_power(fld->cyclo, k));
}

bool Scalar::is_one() const {
  return num_ == den_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return zero(field());
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long long e) const {
  if (e == 0) return one(field());
  Scalar base = e > 0 ? *this : inverse();
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Scalar acc = one(field());
  while (k) {
    if (k & 1ULL) acc = acc * base;
    base = base * base;
    k >>= 1ULL;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string Scalar::to_string() const {
  std::string s = "(" + num_.to_string() + ")";
  if (!(den_ == LaurentPoly::one(den_.field()))) s += " / (" + den_.to_string() + ")";
  return s;
}

namespace {
LaurentPoly remap_poly(const LaurentPoly& p, int first_fresh,
                       const std::vector<int>& bindings, const KFieldPtr& target) {
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = exp_zero(target->nvars);
    for (int i = 0; i < first_fresh; ++i) ne[i] = e[i];
    for (size_t u = 0; u < bindings.size(); ++u)
      ne[bindings[u]] += 2 * e[first_fresh + static_cast<int>(u)];
    Cyclotomic cc(target->cyclo, c.coeffs());
    out.add_term(ne, cc);
  }
  return out;
}
}  // namespace

Scalar substitute_fresh_symbols(const Scalar& expr, int first_fresh,
                                const std::vector<int>& bindings,
                                const KFieldPtr& target) {
  const KFieldPtr& src = expr.field();
  if (first_fresh < 0 || first_fresh > src->nvars)
    throw std::invalid_argument("substitute_fresh_symbols: bad fresh-symbol count");
  if (static_cast<int>(bindings.size()) != src->nvars - first_fresh)
    throw std::invalid_argument("substitute_fresh_symbols: binding count mismatch");
  if (src->cyclo->conductor() != target->cyclo->conductor())
    throw std::invalid_argument("substitute_fresh_symbols: conductor mismatch");
  std::vector<bool> used(static_cast<size_t>(target->nvars), false);
  for (size_t i = 0; i < static_cast<size_t>(first_fresh); ++i) used[i] = true;
  for (int b : bindings) {
    if (b < first_fresh || b >= target->nvars)
      throw std::invalid_argument("substitute_fresh_symbols: binding out of range");
    if (used[b]) throw std::invalid_argument("substitute_fresh_symbols: symbol collision");
    used[b] = true;
  }
  return Scalar(remap_poly(expr.num(), first_fresh, bindings, target),
                remap_poly(expr.den(), first_fresh, bindings, target));
}

}  // namespace tglie
