#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "model.hpp"

using namespace tglie;

namespace {

QuadrupleSpec a1_id() { return {2, {{1, -1}}, {0, 1}, {1, 1}, 1, 1, 0}; }
QuadrupleSpec a2_cox() {
  return {3, {{1, -1, 0}, {0, 1, -1}}, {1, 2, 0}, {1, 1, 1}, 3, 1, 0};
}
QuadrupleSpec a1_neg() { return {2, {{1, -1}}, {0, 1}, {-1, -1}, 2, 1, 0}; }
QuadrupleSpec d2_nud() { return {2, {{1, -1}, {1, 1}}, {0, 1}, {1, -1}, 2, 1, 0}; }

Model model_for(QuadrupleSpec spec, TKind kind, bool star = false,
                bool eta_ones = false) {
  ModelOptions opts;
  opts.tkind = kind;
  Quadruple q(spec);
  if (star) opts.epsC_overrides = eps_star_overrides(q);
  if (eta_ones)
    opts.eta_overrides = std::vector<long long>(spec.q_basis.size(), 0);
  return build_model(spec, opts);
}

IntVec random_q_vec(const Quadruple& q, std::mt19937_64& rng, int window = 2) {
  std::uniform_int_distribution<int> d(-window, window);
  IntVec v(static_cast<size_t>(q.N()), 0);
  for (const auto& b : q.q_basis()) {
    int k = d(rng);
    for (size_t i = 0; i < v.size(); ++i) v[i] += k * b[i];
  }
  return v;
}

}  // namespace

TEST_CASE("lift table for identity, Coxeter, sign flip and diagram cases") {
  // identity isometry: eta(r, alpha) == 1
  {
    Model m = model_for(a1_id(), TKind::GroupAlgebraQ);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t)
      CHECK(m.eta->eta(0, random_q_vec(*m.quad, rng)).is_one());
  }
  // Coxeter with the all-ones cocycle: eta == 1 found by the search
  {
    QuadrupleSpec s = a2_cox();
    ModelOptions opts;
    opts.tkind = TKind::Trivial;
    opts.epsC_overrides =
        std::vector<std::vector<long long>>(2, std::vector<long long>(2, 0));
    Model m = build_model(s, opts);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
      IntVec a = random_q_vec(*m.quad, rng);
      for (int r = 0; r < m.quad->m(); ++r) CHECK(m.eta->eta(r, a).is_one());
    }
  }
  // -Id with the sign cocycle: eta == 1 valid
  {
    Model m = model_for(a1_neg(), TKind::QuotientP2P, true);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
      IntVec a = random_q_vec(*m.quad, rng);
      for (int r = 0; r < m.quad->m(); ++r) CHECK(m.eta->eta(r, a).is_one());
    }
  }
  // diagram automorphism with the sign cocycle: the compatible lift found by
  // the search negates both basis generators
  {
    Model m = model_for(d2_nud(), TKind::QuotientP2ZeN, true);
    CHECK(m.eta->basis_exps() == std::vector<long long>{1, 1});
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
      IntVec a = random_q_vec(*m.quad, rng);
      CHECK(m.eta->eta_exp(m.quad->m(), a) % m.quad->m0() == 0);
    }
  }
}

TEST_CASE("lift is an algebra automorphism of finite order") {
  for (auto make : {std::function<Model()>([] {
                      return model_for(a2_cox(), TKind::Trivial);
                    }),
                    std::function<Model()>([] {
                      return model_for(a1_neg(), TKind::QuotientP2P, true);
                    }),
                    std::function<Model()>([] {
                      return model_for(d2_nud(), TKind::QuotientP2ZeN, true);
                    })}) {
    Model m = make();
    std::mt19937_64 rng(7);
    const auto& q = *m.quad;
    for (int t = 0; t < 40; ++t) {
      IntVec a = random_q_vec(q, rng), b = random_q_vec(q, rng);
      // automorphism: eta(1,a+b) epsC(a,b) = eta(1,a) eta(1,b) epsC(nu a, nu b)
      long long lhs = m.eta->eta1_exp(vec_add(a, b)) + m.epsC->epsC_exp(a, b);
      long long rhs = m.eta->eta1_exp(a) + m.eta->eta1_exp(b) +
                      m.epsC->epsC_exp(q.nu(a, 1), q.nu(b, 1));
      CHECK((((lhs - rhs) % q.m0()) + q.m0()) % q.m0() == 0);
      // order m
      CHECK(m.eta->eta_exp(q.m(), a) % q.m0() == 0);
    }
  }
}

TEST_CASE("module actions") {
  // group algebra of Q: e_alpha . e^beta = epsC(alpha,beta) e^{alpha+beta}
  {
    Model m = model_for(a1_id(), TKind::GroupAlgebraQ, true);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
      IntVec a = random_q_vec(*m.quad, rng), b = random_q_vec(*m.quad, rng);
      auto [f, nl] = m.T->act(a, b);
      CHECK(nl == vec_add(a, b));
      CHECK(f == m.epsC->epsC(a, b));
    }
  }
  // quotient by 2P: e_{2 alpha} acts as the identity
  {
    Model m = model_for(a1_neg(), TKind::QuotientP2P, true);
    std::mt19937_64 rng(9);
    for (const auto& label : m.T->labels(1)) {
      for (int t = 0; t < 5; ++t) {
        IntVec a = random_q_vec(*m.quad, rng);
        IntVec two_a = vec_add(a, a);
        auto [f, nl] = m.T->act(two_a, label);
        CHECK(nl == label);
        CHECK(f.is_one());
      }
    }
  }
}

TEST_CASE("compatibility of the catalog modules") {
  {
    Model m = model_for(a2_cox(), TKind::Trivial);
    auto rep = check_compatibility(*m.quad, *m.epsC, *m.T, *m.eta);
    CHECK_MESSAGE(rep.all_pass(), rep.to_string());
  }
  {
    Model m = model_for(a1_id(), TKind::GroupAlgebraQ);
    auto rep = check_compatibility(*m.quad, *m.epsC, *m.T, *m.eta);
    CHECK_MESSAGE(rep.all_pass(), rep.to_string());
  }
  {
    Model m = model_for(a1_neg(), TKind::QuotientP2P, true);
    auto rep = check_compatibility(*m.quad, *m.epsC, *m.T, *m.eta);
    CHECK_MESSAGE(rep.all_pass(), rep.to_string());
  }
  {
    Model m = model_for(d2_nud(), TKind::QuotientP2ZeN, true);
    auto rep = check_compatibility(*m.quad, *m.epsC, *m.T, *m.eta);
    CHECK_MESSAGE(rep.all_pass(), rep.to_string());
  }
}

TEST_CASE("group operators commute by the commutator function") {
  for (auto mk : {std::function<Model()>([] {
                    return model_for(a1_id(), TKind::GroupAlgebraQ);
                  }),
                  std::function<Model()>([] {
                    return model_for(a1_neg(), TKind::QuotientP2P, true);
                  }),
                  std::function<Model()>([] {
                    return model_for(d2_nud(), TKind::QuotientP2ZeN, true);
                  })}) {
    Model m = mk();
    const auto& q = *m.quad;
    std::mt19937_64 rng(10);
    for (const auto& label : m.T->labels(1)) {
      FockVector v = FockVector::basis(FockKey{label, {}}, Scalar::one(q.field()));
      for (int t = 0; t < 6; ++t) {
        IntVec a = random_q_vec(q, rng, 1), b = random_q_vec(q, rng, 1);
        FockVector ab = act_group(*m.T, a, act_group(*m.T, b, v));
        FockVector ba = act_group(*m.T, b, act_group(*m.T, a, v));
        Scalar c = Scalar::from_cyclo(q.field(), q.commutator_C(a, b));
        CHECK(ab == ba.scaled(c));
      }
    }
  }
}

TEST_CASE("weights are reproduced by the zero-mode action") {
  Model m = model_for(a1_id(), TKind::GroupAlgebraQ);
  const auto& q = *m.quad;
  for (const auto& label : m.T->labels(2)) {
    FockVector v = FockVector::basis(FockKey{label, {}}, Scalar::one(q.field()));
    for (int i = 0; i < q.N(); ++i) {
      IntVec ei(static_cast<size_t>(q.N()), 0);
      ei[i] = 1;
      FockVector got = act_zero_mode(q, *m.T, ei, v);
      Scalar expect = Scalar::from_rat(
          q.field(), Rat(static_cast<long>(dot(q.nu_orbit_sum(ei), label)),
                         static_cast<unsigned long>(q.m())));
      CHECK(got == v.scaled(expect));
    }
  }
}
