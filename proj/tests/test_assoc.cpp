#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "assoc.hpp"

using namespace tglie;

namespace {

ExpVec rc(std::mt19937_64& rng, int rank, int window = 1) {
  std::uniform_int_distribution<int> d(-window, window);
  ExpVec c(static_cast<size_t>(rank), 0);
  for (auto& x : c) x = d(rng);
  return c;
}

AssocElement random_element(const CatalogAlgebra& cat, int N,
                            std::mt19937_64& rng) {
  const int rank = cat.algebra.field()->nvars;
  std::uniform_int_distribution<int> mode(-2, 2);
  std::uniform_int_distribution<int> letter(0, N - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<long long> idx;
  if (cat.name == "bc_graded_o2N")
    idx = {sgn(rng) ? 1 : -1, letter(rng), sgn(rng) ? 1 : -1, letter(rng)};
  else if (cat.name == "gl_quantum_torus" || cat.name == "unitary")
    idx = {letter(rng), letter(rng)};
  else
    idx = {};
  return cat.generator(idx, rc(rng, rank), mode(rng));
}

}  // namespace

TEST_CASE("catalog algebra structure axioms") {
  for (const char* name : {"gl_quantum_torus", "unitary", "trigonometric_A",
                           "trigonometric_B", "bc_graded_o2N"}) {
    CatalogAlgebra cat = catalog_algebra(name, 2, 1);
    auto rep = cat.algebra.validate();
    std::string msg = std::string(name) + "\n" + rep.to_string();
    CHECK_MESSAGE(rep.ok(), msg);
  }
}

TEST_CASE("matrix pair brackets at zero modes") {
  CatalogAlgebra cat = catalog_algebra("gl_quantum_torus", 2, 1);
  const KFieldPtr& K = cat.algebra.field();
  ExpVec c0(1, 0);
  AssocElement e12 = cat.generator({0, 1}, c0, 0);
  AssocElement e21 = cat.generator({1, 0}, c0, 0);
  AssocElement e11 = cat.generator({0, 0}, c0, 0);
  AssocElement e22 = cat.generator({1, 1}, c0, 0);
  CHECK(bracket_from_definition(cat.algebra, e12, e21) == e11 - e22);

  // [ (E11)(1,1), (E11)(1,-1) ] = c
  AssocElement a = cat.generator({0, 0}, c0, 1);
  AssocElement b = cat.generator({0, 0}, c0, -1);
  AssocElement got = bracket_from_definition(cat.algebra, a, b);
  AssocElement expect;
  expect.add_central(Scalar::one(K));
  CHECK(got == expect);
}

TEST_CASE("quantum torus bracket formula on a window of generator pairs") {
  const int N = 2;
  CatalogAlgebra cat = catalog_algebra("gl_quantum_torus", N, 1);
  const KFieldPtr& K = cat.algebra.field();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int p = 0; p < N; ++p)
          for (int cn = -1; cn <= 1; ++cn)
            for (int cr = -1; cr <= 1; ++cr)
              for (long long n = -2; n <= 2; ++n)
                for (long long r = -2; r <= 2; ++r) {
                  ExpVec c1{cn}, c2{cr};
                  AssocElement lhs = bracket_from_definition(
                      cat.algebra, cat.generator({i, j}, c1, n),
                      cat.generator({k, p}, c2, r));
                  AssocElement rhs;
                  Scalar c1r = Scalar::q_monomial(K, c1).pow(r);
                  Scalar c2n = Scalar::q_monomial(K, c2).pow(n);
                  if (j == k)
                    rhs = rhs + cat.generator({i, p}, exp_add(c1, c2), n + r)
                                    .scaled(c1r);
                  if (i == p)
                    rhs = rhs - cat.generator({k, j}, exp_add(c1, c2), n + r)
                                    .scaled(c2n);
                  if (j == k && i == p && n + r == 0 && cn + cr == 0)
                    rhs.add_central(c1r *
                                    Scalar::from_rat(K, Rat(static_cast<long>(n))));
                  CHECK(lhs == rhs);
                }
}

TEST_CASE("antisymmetry and Jacobi on random samples") {
  std::mt19937_64 rng(2);
  for (const char* name : {"gl_quantum_torus", "unitary", "trigonometric_A",
                           "trigonometric_B", "bc_graded_o2N"}) {
    CatalogAlgebra cat = catalog_algebra(name, 2, 1);
    for (int t = 0; t < 50; ++t) {
      AssocElement x = random_element(cat, 2, rng);
      AssocElement y = random_element(cat, 2, rng);
      AssocElement z = random_element(cat, 2, rng);
      CHECK(bracket_from_definition(cat.algebra, x, x).is_zero());
      AssocElement xy = bracket_from_definition(cat.algebra, x, y);
      AssocElement yx = bracket_from_definition(cat.algebra, y, x);
      CHECK((xy + yx).is_zero());
      AssocElement j1 = bracket_from_definition(
          cat.algebra, x, bracket_from_definition(cat.algebra, y, z));
      AssocElement j2 = bracket_from_definition(
          cat.algebra, y, bracket_from_definition(cat.algebra, z, x));
      AssocElement j3 = bracket_from_definition(
          cat.algebra, z, bracket_from_definition(cat.algebra, x, y));
      CHECK((j1 + j2 + j3).is_zero());
    }
  }
}

TEST_CASE("central element is annihilated") {
  CatalogAlgebra cat = catalog_algebra("unitary", 2, 1);
  AssocElement c;
  c.add_central(Scalar::one(cat.algebra.field()));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    AssocElement x = random_element(cat, 2, rng);
    CHECK(bracket_from_definition(cat.algebra, x, c).is_zero());
    CHECK(bracket_from_definition(cat.algebra, c, x).is_zero());
  }
}

TEST_CASE("unitary generator relation") {
  CatalogAlgebra cat = catalog_algebra("unitary", 2, 1);
  const KFieldPtr& K = cat.algebra.field();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int cn = -1; cn <= 1; ++cn)
        for (long long n = -2; n <= 2; ++n) {
          ExpVec c{cn};
          // u_{ij}(c,n) = -(-c)^{-n} u_{ji}(c^{-1},n)
          Scalar factor = Scalar::from_rat(K, Rat(n % 2 == 0 ? -1 : 1)) *
                          Scalar::q_monomial(K, c).pow(-n);
          AssocElement lhs = cat.generator({i, j}, c, n);
          AssocElement rhs = cat.generator({j, i}, exp_neg(c), n).scaled(factor);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("bc graded generator relation") {
  CatalogAlgebra cat = catalog_algebra("bc_graded_o2N", 2, 1);
  const KFieldPtr& K = cat.algebra.field();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> letter(0, 1), sgn(0, 1), cexp(-1, 1),
        mode(-2, 2);
    long long ri = sgn(rng) ? 1 : -1, i = letter(rng);
    long long rj = sgn(rng) ? 1 : -1, j = letter(rng);
    ExpVec c{cexp(rng)};
    long long n = mode(rng);
    // with the identity twist the flip relation carries no mode sign:
    // f_{A,B}(c,n) = -c^{-n} f_{-B,-A}(c^{-1},n)
    AssocElement lhs = cat.generator({ri, i, rj, j}, c, n);
    AssocElement rhs = cat.generator({-rj, j, -ri, i}, exp_neg(c), n)
                           .scaled(-Scalar::q_monomial(K, c).pow(-n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("trigonometric bracket values") {
  // plain series
  {
    CatalogAlgebra cat = catalog_algebra("trigonometric_A", 1, 2);
    const KFieldPtr& K = cat.algebra.field();
    for (int n1 = -1; n1 <= 1; ++n1)
      for (int n2 = -1; n2 <= 1; ++n2)
        for (long long m1 = -2; m1 <= 2; ++m1)
          for (long long m2 = -2; m2 <= 2; ++m2) {
            ExpVec u{n1, n2}, v{-n1, 1};
            AssocElement lhs = bracket_from_definition(
                cat.algebra, cat.generator({}, u, m1), cat.generator({}, v, m2));
            // sine coefficient: s^{m2 u - m1 v} - s^{m1 v - m2 u}
            ExpVec e = exp_add(exp_scale(u, m2), exp_scale(v, -m1));
            AssocElement rhs =
                cat.generator({}, exp_add(u, v), m1 + m2)
                    .scaled(Scalar::s_monomial(K, e) -
                            Scalar::s_monomial(K, exp_neg(e)));
            if (m1 + m2 == 0 && exp_is_zero(exp_add(u, v)))
              rhs.add_central(Scalar::from_rat(K, Rat(static_cast<long>(m1))));
            CHECK(lhs == rhs);
          }
  }
  // half-period twisted series
  {
    CatalogAlgebra cat = catalog_algebra("trigonometric_B", 1, 2);
    const KFieldPtr& K = cat.algebra.field();
    for (int n1 = -1; n1 <= 1; ++n1)
      for (int n2 = -1; n2 <= 1; ++n2)
        for (long long m1 = -2; m1 <= 2; ++m1)
          for (long long m2 = -2; m2 <= 2; ++m2) {
            ExpVec u{n1, n2}, v{n2, -n1};
            AssocElement lhs = bracket_from_definition(
                cat.algebra, cat.generator({}, u, m1), cat.generator({}, v, m2));
            ExpVec e = exp_add(exp_scale(u, m2), exp_scale(v, -m1));
            AssocElement rhs =
                cat.generator({}, exp_add(u, v), m1 + m2)
                    .scaled(Scalar::s_monomial(K, e) -
                            Scalar::s_monomial(K, exp_neg(e)));
            // second term: (-1)^{m2} (s^{-m2 u - m1 v} - s^{m2 u + m1 v}) B_{u-v}
            ExpVec e2 = exp_add(exp_scale(u, -m2), exp_scale(v, -m1));
            Scalar sin2 = Scalar::s_monomial(K, e2) -
                          Scalar::s_monomial(K, exp_neg(e2));
            if (m2 % 2 != 0) sin2 = -sin2;
            rhs = rhs + cat.generator({}, exp_add(u, exp_neg(v)), m1 + m2)
                            .scaled(sin2);
            if (m1 + m2 == 0) {
              Scalar cen = Scalar::zero(K);
              if (exp_is_zero(exp_add(u, v)))
                cen = cen + Scalar::from_rat(K, Rat(static_cast<long>(m1)));
              if (u == v) {
                Scalar t = Scalar::from_rat(K, Rat(static_cast<long>(m1)));
                if (m1 % 2 != 0) t = -t;
                cen = cen - t;
              }
              rhs.add_central(cen);
            }
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("canonical labels") {
  CatalogAlgebra cat = catalog_algebra("unitary", 2, 1);
  const KFieldPtr& K = cat.algebra.field();
  std::mt19937_64 rng(5);
  // idempotence
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> idx(0, cat.algebra.dim() - 1), cexp(-2, 2),
        mode(-2, 2);
    AssocKey k{idx(rng), {cexp(rng)}, mode(rng)};
    AssocCanon c1 = canonicalize_assoc(cat.algebra, k);
    if (c1.zero) continue;
    AssocCanon c2 = canonicalize_assoc(cat.algebra, c1.key);
    CHECK_FALSE(c2.zero);
    CHECK(c2.key == c1.key);
    CHECK(c2.factor == Scalar::one(K));
  }
  // the flip of a u-type label picks up -(-q1)^{-1} at (c,n) = (q1,1)
  {
    AssocKey k{0 * 2 + 1, {1}, 1};  // (E_{12}, 0) at c = q1, n = 1
    AssocCanon c = canonicalize_assoc(cat.algebra, k);
    REQUIRE_FALSE(c.zero);
    // the canonical representative is the flipped label with a factor that
    // composes back to the generator relation
    AssocElement via_canon =
        assoc_generator(cat.algebra, c.key.a, c.key.c, c.key.n).scaled(c.factor);
    AssocElement direct = assoc_generator(cat.algebra, k.a, k.c, k.n);
    CHECK(via_canon == direct);
  }
  // forced zero: diagonal unitary label with trivial group element, even mode
  {
    AssocKey k{0, {0}, 2};  // (E_{11},0) at c = 1, n = 2
    AssocCanon c = canonicalize_assoc(cat.algebra, k);
    CHECK(c.zero);
    CHECK(assoc_generator(cat.algebra, 0, {0}, 2).is_zero());
    AssocCanon c1 = canonicalize_assoc(cat.algebra, AssocKey{0, {0}, 1});
    CHECK_FALSE(c1.zero);
  }
}

TEST_CASE("tilde decomposition is a left inverse of expansion") {
  std::mt19937_64 rng(6);
  for (const char* name : {"unitary", "bc_graded_o2N"}) {
    CatalogAlgebra cat = catalog_algebra(name, 2, 1);
    for (int t = 0; t < 20; ++t) {
      AssocElement x = random_element(cat, 2, rng) +
                       random_element(cat, 2, rng).scaled(
                           Scalar::from_rat(cat.algebra.field(), Rat(3, 2)));
      auto [keys, central] = tilde_decompose(cat.algebra, x);
      AssocElement rebuilt;
      rebuilt.add_central(central);
      for (const auto& [k, coeff] : keys)
        rebuilt = rebuilt +
                  assoc_generator(cat.algebra, k.a, k.c, k.n).scaled(coeff);
      CHECK(rebuilt == x);
    }
  }
}
