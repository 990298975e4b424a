#include "vertex.hpp"

#include <cassert>
#include <stdexcept>

namespace tglie {

VertexOpSpec VertexOpSpec::make(const Model& M, const JKey& j, const ExpVec& c) {
  const Quadruple& q = *M.quad;
  if (!q.in_Q(q.jkey_vec(j)))
    throw std::invalid_argument("vertex operator outside the index set");
  VertexOpSpec s;
  s.j = j;
  s.c = c;
  if (j.a == j.b && exp_is_zero(c)) {
    s.cartan = true;
    s.normalization = Scalar::one(q.field());
    return s;
  }
  if (j.a == j.b.negated() && exp_is_zero(c)) {
    // the excluded diagonal case: the operator vanishes identically
    s.normalization = Scalar::zero(q.field());
    return s;
  }
  Scalar z = Scalar::from_cyclo(q.field(), zeta_const(q, q.jkey_vec(j)));
  s.normalization = Scalar::from_rat(q.field(),
                                     Rat(1, static_cast<unsigned long>(q.m()))) *
                    z * kappa_const(q, j, c);
  return s;
}

ModeResult apply_mode_counted(const Model& M, const VertexOpSpec& spec,
                              long long n, const FockVector& v) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  ModeResult res;
  if (v.is_zero()) return res;

  if (spec.cartan) {
    IntVec alpha = q.signed_vec(spec.j.a);
    if (n == 0)
      res.out = act_zero_mode(q, *M.T, alpha, v);
    else
      res.out = current_apply(*M.hb, alpha, n, v);
    return res;
  }
  if (spec.normalization.is_zero()) return res;

  IntVec alpha = q.jkey_vec(spec.j);
  IntVec ei = q.signed_vec(spec.j.a);
  IntVec mej = vec_neg(q.signed_vec(spec.j.b));
  IntVec s_alpha = q.nu_orbit_sum(alpha);
  long long const_2z = dot(alpha, s_alpha);  // twice the constant z-shift
  if (const_2z % 2 != 0)
    throw std::domain_error("vertex operator with non-integral mode shift");
  long long const_z = const_2z / 2;
  IntVec ej_plus(static_cast<size_t>(q.N()), 0);
  ej_plus[spec.j.b.idx] = 1;
  long long twice_cconst = dot(ej_plus, q.nu_orbit_sum(ej_plus));
  IntVec s_ejb = q.nu_orbit_sum(q.signed_vec(spec.j.b));

  std::vector<EOperand> ops{{ei, {}}, {mej, spec.c}};

  // group the input by label: the scalar tail and the group shift act per label
  std::map<IntVec, FockVector> by_label;
  for (const auto& [k, coeff] : v.terms())
    by_label[k.label].add_term(k, coeff);

  long long degree_bound = 0;
  for (auto& [label, vlab] : by_label) {
    const IntVec& beta = M.T->weight_rep(label);
    long long e_z = dot(s_alpha, beta) + const_z;
    long long twice_ce = -2 * dot(s_ejb, beta) + twice_cconst;
    Scalar tail = Scalar::q_power_half(K, spec.c, twice_ce);

    auto eplus = eplus_expand(*M.hb, ops, vlab);
    for (long long ep = 0; ep < static_cast<long long>(eplus.size()); ++ep) {
      if (eplus[ep].is_zero()) continue;
      res.eplus_terms += static_cast<long long>(eplus[ep].terms().size());
      // total z exponent: (-ep) + em + e_z = -n
      long long em = -n - e_z + ep;
      if (em < 0) continue;
      auto ems = eminus_expand(*M.hb, ops, eplus[ep], em);
      const FockVector& w = ems[static_cast<size_t>(em)];
      if (w.is_zero()) continue;
      res.eminus_terms += static_cast<long long>(w.terms().size());
      FockVector shifted = act_group(*M.T, alpha, w);
      res.out = res.out + shifted.scaled(tail);
    }
    degree_bound =
        std::max(degree_bound, vlab.degree() + std::llabs(n) + std::llabs(e_z));
  }
  assert(res.out.is_zero() || res.out.degree() <= degree_bound);
  (void)degree_bound;
  res.out = res.out.scaled(spec.normalization);
  return res;
}

FockVector apply_mode(const Model& M, const VertexOpSpec& spec, long long n,
                      const FockVector& v) {
  return apply_mode_counted(M, spec, n, v).out;
}

bool check_flip_identity(const Model& M, const JKey& j, const ExpVec& c,
                         long long window, const std::vector<FockVector>& vs) {
  const KFieldPtr& K = M.field();
  VertexOpSpec lhs = VertexOpSpec::make(M, j, c);
  VertexOpSpec rhs =
      VertexOpSpec::make(M, JKey{j.b.negated(), j.a.negated()}, exp_neg(c));
  for (long long n = -window; n <= window; ++n) {
    Scalar factor = Scalar::q_monomial(K, c).pow(-n);
    if (j.diagonal_letters()) factor = -factor;
    for (const auto& v : vs) {
      FockVector l = apply_mode(M, lhs, n, v);
      FockVector r = apply_mode(M, rhs, n, v).scaled(factor);
      if (!(l == r)) return false;
    }
  }
  return true;
}

bool check_orbit_identity(const Model& M, const JKey& j, const ExpVec& c, int r,
                          long long window, const std::vector<FockVector>& vs) {
  const Quadruple& q = *M.quad;
  const KFieldPtr& K = q.field();
  VertexOpSpec lhs = VertexOpSpec::make(M, j, c);
  VertexOpSpec rhs =
      VertexOpSpec::make(M, JKey{q.nu_signed(j.a, r), q.nu_signed(j.b, r)}, c);
  Cyclotomic eta = M.eta->eta(r, q.jkey_vec(j));
  for (long long n = -window; n <= window; ++n) {
    Scalar lfac = Scalar::from_cyclo(K, q.omega_pow(r * n));
    Scalar rfac = Scalar::from_cyclo(K, eta);
    for (const auto& v : vs) {
      FockVector l = apply_mode(M, lhs, n, v).scaled(lfac);
      FockVector rr = apply_mode(M, rhs, n, v).scaled(rfac);
      if (!(l == rr)) return false;
    }
  }
  return true;
}

int case_classifier(const ExpVec& c1, const ExpVec& c2) {
  bool c1_one = exp_is_zero(c1);
  bool c2_one = exp_is_zero(c2);
  bool prod_one = exp_is_zero(exp_add(c1, c2));
  bool equal = c1 == c2;
  if (c1_one && c2_one) return 4;
  if (c1_one) return 2;
  if (c2_one) return 3;
  if (prod_one && equal)
    throw std::domain_error(
        "group elements with c1 = c2 and c1 c2 = 1 are not representable");
  if (prod_one) return 5;
  if (equal) return 6;
  return 1;
}

TheoremCheck verify_theorem(const Model& M, const GenKey& k1, const GenKey& k2,
                            const FockVector& v) {
  VertexOpSpec s1 = VertexOpSpec::make(M, k1);
  VertexOpSpec s2 = VertexOpSpec::make(M, k2);
  FockVector lhs = apply_mode(M, s1, k1.n, apply_mode(M, s2, k2.n, v)) -
                   apply_mode(M, s2, k2.n, apply_mode(M, s1, k1.n, v));
  LieElement br = bracket_pair(M, k1, k2);
  FockVector rhs;
  for (const auto& [k, coeff] : br.terms()) {
    VertexOpSpec s = VertexOpSpec::make(M, k);
    rhs = rhs + apply_mode(M, s, k.n, v).scaled(coeff);
  }
  if (br.central().num().field() != nullptr)
    rhs = rhs + v.scaled(br.central());
  return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

bool norm_constant_product_holds(const Model& M, const IntVec& alpha,
                                 const IntVec& beta, int r) {
  const Quadruple& q = *M.quad;
  const CycloFieldPtr& C = q.field()->cyclo;
  IntVec nrb = q.nu(beta, r);
  Cyclotomic lhs = zeta_const(q, alpha) * zeta_const(q, beta) *
                   M.epsC->eps_prime(alpha, nrb).inverse() *
                   zeta_const(q, vec_add(alpha, nrb)).inverse();
  Cyclotomic rhs = Cyclotomic::one(C);
  for (int p = 1; p < q.m(); ++p) {
    Cyclotomic base = Cyclotomic::one(C) - q.omega_pow(p);
    rhs = rhs * base.pow(-dot(alpha, q.nu(nrb, p)));
  }
  return lhs == rhs;
}

}  // namespace tglie
