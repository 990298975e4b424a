#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "identities.hpp"

using namespace tglie;

namespace {

std::vector<std::vector<int>> profiles(int n, const std::vector<int>& values) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int v : values) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

Model a1_neg_model() {
  ModelOptions o;
  QuadrupleSpec s{2, {{1, -1}}, {0, 1}, {-1, -1}, 2, 1, 0};
  o.epsC_overrides = eps_star_overrides(Quadruple(s));
  o.eta_overrides = std::vector<long long>{0};
  return build_model(s, o);
}

}  // namespace

TEST_CASE("partial fraction sums") {
  // n = 1: both sides are the single term
  CHECK(verify_rational(RationalIdentity::PfracSumS, 1, {}));
  for (int n = 1; n <= 3; ++n) {
    CHECK(verify_rational(RationalIdentity::PfracSumS, n, {}));
    CHECK(verify_rational(RationalIdentity::PfracSumT, n, {}));
    CHECK(verify_rational(RationalIdentity::PfracSquareS, n, {}));
    CHECK(verify_rational(RationalIdentity::PfracSquareT, n, {}));
  }
}

TEST_CASE("profile product expansions") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : profiles(n, {1, 2})) {
      CHECK(verify_rational(RationalIdentity::ProfileProdS, n, p));
      CHECK(verify_rational(RationalIdentity::ProfileProdT, n, p));
      CHECK(verify_series(SeriesIdentity::ProfileSeriesZ, n, p, 7));
      CHECK(verify_series(SeriesIdentity::ProfileSeriesTZ, n, p, 7));
      CHECK(verify_series(SeriesIdentity::DeltaSplit, n, p, 6));
    }
}

TEST_CASE("single factor reflection gives a plain delta") {
  // (1 - t z)^{-1} minus its reflected expansion is delta(t z): the checker
  // compares every coefficient against t^e
  CHECK(verify_series(SeriesIdentity::LaurentReflection, 1, {-1}, 8));
}

TEST_CASE("reflection identity over small profiles") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& p : profiles(n, {-2, -1, 0, 1, 2}))
      CHECK(verify_series(SeriesIdentity::LaurentReflection, n, p, 6));
}

TEST_CASE("randomized delta evaluations") {
  CHECK(verify_series_random(SeriesIdentity::DeltaEval, 6, 101, 10));
  CHECK(verify_series_random(SeriesIdentity::DDeltaEval, 6, 102, 10));
  CHECK(verify_series_random(SeriesIdentity::BivarDeltaEval, 4, 103, 6));
  CHECK(verify_series_random(SeriesIdentity::BivarDDeltaEval, 4, 104, 6));
}

TEST_CASE("root of unity specialization of the reflection identity") {
  Model M = a1_neg_model();
  IntVec alpha{1, -1};
  CHECK(verify_reflection_specialization(M, alpha, alpha, 6));
  auto side = verify_orbit_weight_sum(M, alpha, alpha);
  REQUIRE(side.has_value());
  CHECK(*side);
  // no shift pairs to -2 for orthogonal vectors: vacuous
  ModelOptions o;
  Model M2 = build_model({2, {{1, -1}}, {0, 1}, {1, 1}, 1, 1, 0}, o);
  CHECK_FALSE(verify_orbit_weight_sum(M2, {1, -1}, {0, 0}).has_value());
}
