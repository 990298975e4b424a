#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "fock.hpp"

using namespace tglie;

namespace {

QuadruplePtr make_quad(QuadrupleSpec s) { return std::make_shared<Quadruple>(s); }

QuadruplePtr a1_id() { return make_quad({2, {{1, -1}}, {0, 1}, {1, 1}, 1, 1, 0}); }
QuadruplePtr a2_cox() {
  return make_quad({3, {{1, -1, 0}, {0, 1, -1}}, {1, 2, 0}, {1, 1, 1}, 3, 1, 0});
}
QuadruplePtr a1_neg() {
  return make_quad({2, {{1, -1}}, {0, 1}, {-1, -1}, 2, 1, 0});
}
QuadruplePtr d2_nud() {
  return make_quad({2, {{1, -1}, {1, 1}}, {0, 1}, {1, -1}, 2, 1, 0});
}
QuadruplePtr n1_id() { return make_quad({1, {}, {0}, {1}, 1, 1, 0}); }
QuadruplePtr n1_neg() { return make_quad({1, {}, {0}, {-1}, 2, 1, 0}); }

FockVector vac() {
  return FockVector::basis(FockKey{{}, {}}, Scalar::one(make_kfield(2, 0)));
}

FockVector vac_for(const QuadruplePtr& q) {
  return FockVector::basis(FockKey{{}, {}}, Scalar::one(q->field()));
}

FockVector random_vector(const HeisenbergBasis& hb, std::mt19937_64& rng,
                         int max_deg) {
  const auto& q = *hb.quad();
  FockVector v = vac_for(hb.quad());
  std::uniform_int_distribution<int> deg(0, max_deg);
  int budget = deg(rng);
  while (budget > 0) {
    std::uniform_int_distribution<int> part(1, budget);
    int n = part(rng);
    std::uniform_int_distribution<int> pick(0, q.N() - 1);
    int rep = pick(rng);
    FockVector w = heisenberg_apply(hb, rep, -n, v);
    if (!w.is_zero()) {
      v = w;
      budget -= n;
    } else {
      // that projection vanishes; try a different part size
      if (budget == 1) break;
      budget -= 1;
    }
  }
  return v;
}

// independent enumeration of creation monomials of degree d
long long count_monomials(const HeisenbergBasis& hb, int d) {
  std::function<long long(int, int)> go = [&](int remaining, int min_part) {
    if (remaining == 0) return 1LL;
    long long total = 0;
    for (int part = min_part; part <= remaining; ++part) {
      int kinds = hb.dim(-part);
      if (kinds == 0) continue;
      // choose how many factors of this part size: multiset over `kinds` slots
      std::function<long long(int, int)> pick = [&](int cnt, int rem) -> long long {
        (void)cnt;
        (void)rem;
        return 0;
      };
      // enumerate count explicitly
      for (int cnt = 1; cnt * part <= remaining; ++cnt) {
        // multisets of size cnt from `kinds` slots: C(kinds+cnt-1, cnt)
        long long ways = 1;
        for (int i = 0; i < cnt; ++i) ways = ways * (kinds + i) / (i + 1);
        total += ways * go(remaining - cnt * part, part + 1);
      }
    }
    return total;
  };
  return go(d, 1);
}

}  // namespace

TEST_CASE("heisenberg action on the vacuum") {
  auto q = n1_id();
  HeisenbergBasis hb(q);
  FockVector v = vac_for(q);
  // x(1) x(-1) vac = <eps1,eps1> vac = vac
  FockVector w = heisenberg_apply(hb, 0, -1, v);
  FockVector u = heisenberg_apply(hb, 0, 1, w);
  CHECK(u == v);
  // annihilators kill the vacuum
  for (long long n : {1, 2, 3}) CHECK(heisenberg_apply(hb, 0, n, v).is_zero());
}

TEST_CASE("commutator vanishes off the diagonal mode pairing") {
  auto q = a1_id();
  HeisenbergBasis hb(q);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    FockVector v = random_vector(hb, rng, 4);
    FockVector ab = heisenberg_apply(hb, 0, 1, heisenberg_apply(hb, 1, -2, v));
    FockVector ba = heisenberg_apply(hb, 1, -2, heisenberg_apply(hb, 0, 1, v));
    CHECK(ab == ba);
  }
}

TEST_CASE("heisenberg bracket relation on sampled vectors") {
  for (auto q : {a1_id(), a2_cox(), a1_neg(), d2_nud()}) {
    HeisenbergBasis hb(q);
    std::mt19937_64 rng(17);
    const KFieldPtr& K = q->field();
    for (int t = 0; t < 8; ++t) {
      FockVector v = random_vector(hb, rng, 6);
      for (long long n = 1; n <= 3; ++n)
        for (long long r = -3; r <= -1; ++r)
          for (int x = 0; x < q->N(); ++x)
            for (int y = 0; y < q->N(); ++y) {
              const auto* ex = hb.lookup(x, n);
              const auto* ey = hb.lookup(y, r);
              if (ex == nullptr || ey == nullptr) continue;
              FockVector lhs =
                  heisenberg_apply(hb, x, n, heisenberg_apply(hb, y, r, v)) -
                  heisenberg_apply(hb, y, r, heisenberg_apply(hb, x, n, v));
              Cyclotomic pairing = hb.pairing(ex->vec, ey->vec);
              Scalar expect =
                  n + r == 0
                      ? Scalar::from_cyclo(K, pairing) *
                            Scalar::from_rat(K,
                                             Rat(static_cast<long>(n),
                                                 static_cast<unsigned long>(q->m())))
                      : Scalar::zero(K);
              CHECK(lhs == v.scaled(expect));
            }
    }
  }
}

TEST_CASE("graded dimensions") {
  {
    auto q = n1_id();
    HeisenbergBasis hb(q);
    // partition numbers 1,1,2,3,5,7,11,15,22
    std::vector<long long> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int d = 0; d <= 8; ++d) CHECK(graded_dimension(hb, d) == p[d]);
  }
  {
    auto q = n1_neg();
    HeisenbergBasis hb(q);
    CHECK(hb.dim(0) == 0);
    CHECK(hb.dim(1) == 1);
    CHECK(graded_dimension(hb, 0) == 1);
    CHECK(graded_dimension(hb, 2) == 1);
  }
  for (auto q : {a1_id(), a2_cox(), a1_neg(), d2_nud(), n1_id(), n1_neg()}) {
    HeisenbergBasis hb(q);
    for (int d = 0; d <= 8; ++d)
      CHECK(graded_dimension(hb, d) == count_monomials(hb, d));
  }
}

TEST_CASE("exponential factors on the vacuum") {
  auto q = a1_id();
  HeisenbergBasis hb(q);
  FockVector v = vac_for(q);
  IntVec alpha{1, -1};

  auto plus = apply_E(hb, +1, alpha, {}, v, 8);
  REQUIRE(plus.size() == 1);
  CHECK(plus.count(0) == 1);
  CHECK(plus[0] == v);

  auto minus = apply_E(hb, -1, alpha, {}, v, 3);
  // coefficient of z^1 is alpha(-1) vac
  FockVector expect = current_apply(hb, alpha, -1, v);
  CHECK(minus.at(1) == expect);
}

TEST_CASE("isometry shift of the exponential argument") {
  for (auto q : {a2_cox(), a1_neg(), d2_nud()}) {
    HeisenbergBasis hb(q);
    std::mt19937_64 rng(23);
    const KFieldPtr& K = q->field();
    IntVec gamma(static_cast<size_t>(q->N()), 0);
    gamma[0] = 1;
    if (q->N() > 1) gamma[1] = -1;
    for (int r = 0; r < q->m(); ++r) {
      FockVector v = random_vector(hb, rng, 3);
      for (int sign : {+1, -1}) {
        long long D = 4;
        auto lhs = apply_E(hb, sign, q->nu(gamma, r), {}, v, D);
        auto rhs = apply_E(hb, sign, gamma, {}, v, D);
        // E(nu^r gamma, z) = E(gamma, omega^{-r} z): exponent e picks omega^{-r e}
        for (long long e = -D; e <= D; ++e) {
          FockVector l = lhs.count(e) ? lhs.at(e) : FockVector{};
          FockVector rr = rhs.count(e) ? rhs.at(e) : FockVector{};
          Scalar w = Scalar::from_cyclo(K, q->omega_pow(-r * e));
          CHECK(l == rr.scaled(w));
        }
      }
    }
  }
}

TEST_CASE("contraction of annihilation past creation exponentials") {
  // E^+(g1,z1) E^-(g2,z2) = E^-(g2,z2) E^+(g1,z1) prod_p (1-w^p z2/z1)^{<g1,nu^p g2>}
  for (auto q : {a1_id(), a2_cox(), a1_neg(), d2_nud()}) {
    HeisenbergBasis hb(q);
    const KFieldPtr& K = q->field();
    std::mt19937_64 rng(29);
    IntVec g1(static_cast<size_t>(q->N()), 0), g2(static_cast<size_t>(q->N()), 0);
    g1[0] = 1;
    g2[q->N() - 1] = -1;
    if (q->N() > 1) g1[1] = -1;
    const long long D = 3;
    for (int t = 0; t < 3; ++t) {
      FockVector v = random_vector(hb, rng, 3);
      long long degv = v.degree();
      // LHS coefficients: E^- at z2^b, then E^+ at z1^a
      auto em = eminus_expand(hb, {{g2, {}}}, v, D);
      std::map<std::pair<long long, long long>, FockVector> lhs;
      for (long long b = 0; b <= D; ++b) {
        if (em[b].is_zero()) continue;
        auto ep = eplus_expand(hb, {{g1, {}}}, em[b]);
        for (long long e = 0; e < static_cast<long long>(ep.size()); ++e)
          if (!ep[e].is_zero()) lhs[{-e, b}] = ep[e];
      }
      // RHS: E^+ first, then E^-, then multiply the series in x = z2/z1
      long long xmax = D + degv + 2;
      std::vector<Cyclotomic> series(static_cast<size_t>(xmax) + 1,
                                     Cyclotomic::zero(K->cyclo));
      series[0] = Cyclotomic::one(K->cyclo);
      for (int p = 0; p < q->m(); ++p) {
        long long e = dot(g1, q->nu(g2, p));
        if (e == 0) continue;
        // multiply by (1 - w^p x)^e truncated at xmax
        std::vector<Cyclotomic> factor(static_cast<size_t>(xmax) + 1,
                                       Cyclotomic::zero(K->cyclo));
        if (e > 0) {
          // (1-u)^e = sum_k (-1)^k C(e,k) u^k with u = w^p x
          Cyclotomic pw = Cyclotomic::one(K->cyclo);
          Rat binom(1);
          for (long long k = 0; k <= e && k <= xmax; ++k) {
            factor[k] = Cyclotomic::from_rat(K->cyclo, binom) * pw;
            if (k % 2 == 1) factor[k] = -factor[k];
            binom = binom * Rat(static_cast<long>(e - k)) /
                    Rat(static_cast<long>(k + 1));
            pw = pw * q->omega_pow(p);
          }
        } else {
          // (1-u)^{-f} = sum C(k+f-1, f-1) u^k
          long long f = -e;
          Cyclotomic pw = Cyclotomic::one(K->cyclo);
          for (long long k = 0; k <= xmax; ++k) {
            Rat c(1);
            for (long long i = 1; i <= k; ++i)
              c = c * Rat(static_cast<long>(f + i - 1)) / Rat(static_cast<long>(i));
            factor[k] = Cyclotomic::from_rat(K->cyclo, c) * pw;
            pw = pw * q->omega_pow(p);
          }
        }
        std::vector<Cyclotomic> next(static_cast<size_t>(xmax) + 1,
                                     Cyclotomic::zero(K->cyclo));
        for (long long i = 0; i <= xmax; ++i)
          for (long long j = 0; i + j <= xmax; ++j)
            next[i + j] = next[i + j] + series[i] * factor[j];
        series = std::move(next);
      }
      auto ep0 = eplus_expand(hb, {{g1, {}}}, v);
      std::map<std::pair<long long, long long>, FockVector> rhs;
      for (long long e = 0; e < static_cast<long long>(ep0.size()); ++e) {
        if (ep0[e].is_zero()) continue;
        auto em2 = eminus_expand(hb, {{g2, {}}}, ep0[e], D + degv);
        for (long long b = 0; b < static_cast<long long>(em2.size()); ++b) {
          if (em2[b].is_zero()) continue;
          // multiply by series in x = z2/z1: adds (k, -k) to (z2, z1) exponents
          for (long long k = 0; k <= xmax; ++k) {
            if (series[k].is_zero()) continue;
            long long z1e = -e - k, z2e = b + k;
            FockVector add = em2[b].scaled(Scalar::from_cyclo(K, series[k]));
            auto key = std::make_pair(z1e, z2e);
            auto it = rhs.find(key);
            if (it == rhs.end())
              rhs[key] = add;
            else
              it->second = it->second + add;
          }
        }
      }
      for (long long a = -degv - D; a <= 0; ++a)
        for (long long b = 0; b <= D; ++b) {
          FockVector l = lhs.count({a, b}) ? lhs[{a, b}] : FockVector{};
          FockVector r = rhs.count({a, b}) ? rhs[{a, b}] : FockVector{};
          CHECK(l == r);
        }
    }
  }
}
