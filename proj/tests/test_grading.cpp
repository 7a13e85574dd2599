#include <doctest.h>

#include <random>

#include "brieskorn/errors.hpp"
#include "brieskorn/grading.hpp"

using namespace brieskorn;

namespace {

const std::filesystem::path kData = TEST_DATA_DIR;

std::int64_t vdim(std::vector<std::int64_t> p, std::vector<std::int64_t> m, std::vector<std::int64_t> c, std::int64_t n) {
  return virtual_dimension(p, m, c, n);
}

std::vector<std::int64_t> degrees_of(const std::vector<Generator>& gens) {
  std::vector<std::int64_t> out;
  for (const auto& g : gens) {
    for (std::int64_t k = 0; k < g.multiplicity; ++k) out.push_back(g.product_degree);
  }
  return out;
}

}  // namespace

TEST_CASE("product degrees of the (2,2,2,2) generators") {
  const ExponentTuple t({2, 2, 2, 2});
  const BettiTable betti = BettiTable::bundled(kData);
  const Stratum s2 = *make_stratum(t, 2, betti);
  const Stratum s0 = *make_stratum(t, 0, betti);
  CHECK(product_degree(t, s2, 5) == 4);
  CHECK(product_degree(t, s2, 5) == t.mu_p());
  CHECK(product_degree(t, s0, 5) == 0);
  CHECK(degrees_of(stratum_generators(t, s0)) == std::vector<std::int64_t>{-5, -3, -2, 0});
  CHECK(s2.mu_rs - (s2.dim - 1) / 2 + 2 - t.n() == product_degree(t, s2, 2));
}

TEST_CASE("(4,2,2,2) at L = 2") {
  const ExponentTuple t({4, 2, 2, 2});
  const Stratum s = *make_stratum(t, 2, BettiTable::bundled(kData));
  CHECK(s.mu_rs == 3);
  CHECK(s.dim == 3);
  CHECK(degrees_of(stratum_generators(t, s)) == std::vector<std::int64_t>{-1, 0, 1, 2});
  for (const auto& g : stratum_generators(t, s)) {
    CHECK(g.cz_degree == g.product_degree + 3);
    CHECK(g.action == Rational(1, 2));
  }
}

TEST_CASE("principal orbit class") {
  CHECK(s_class(ExponentTuple({2, 2, 2, 2})).product_degree == 4);
  CHECK(s_class(ExponentTuple({2, 2, 2, 2})).action == Rational(1));
  CHECK(s_class(ExponentTuple({6, 2, 2, 2})).product_degree == 8);
  CHECK(s_class(ExponentTuple({2, 4, 4})).product_degree == 0);
}

TEST_CASE("generators shift by mu_P from one period to the next") {
  std::mt19937_64 rng(3);
  const BettiTable betti = BettiTable::bundled(kData);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::int64_t> a(3 + rng() % 3, 2);
    a[0] = 2 + static_cast<std::int64_t>(rng() % 6);
    const ExponentTuple t(a);
    std::optional<StrataList> found;
    try {
      found = enumerate_strata(t, 3 * t.period(), betti);
    } catch (const MissingBettiError&) {
      continue;
    }
    const StrataList& list = *found;
    ++tested;
    for (const auto& s : list.strata) {
      if (s.L == 0 || s.L > 2 * t.period()) continue;
      const auto lo = stratum_generators(t, s);
      const auto hi = stratum_generators(t, *list.find(s.L + t.period()));
      REQUIRE(lo.size() == hi.size());
      for (std::size_t i = 0; i < lo.size(); ++i) {
        CHECK(hi[i].product_degree == lo[i].product_degree + t.mu_p());
        CHECK(hi[i].action == lo[i].action + 1);
        CHECK(lo[i].action == Rational(s.L, t.period()));
      }
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("generator table windows") {
  const ExponentTuple t({2, 2, 2, 2});
  const BettiTable betti = BettiTable::bundled(kData);
  const DegreeWindow w{-6, 6};
  const std::int64_t need = strata_needed_for_window(t, w);
  const auto table = generator_table(enumerate_strata(t, need, betti), w);
  // One generator per degree from −5 up; the negative s-powers behind
  // degrees −6 and −4 are not chain generators.
  CHECK(table.generators.size() == 11);
  CHECK(table.generators.front().product_degree == -5);
  for (std::size_t i = 1; i < table.generators.size(); ++i) {
    CHECK(table.generators[i - 1].action <= table.generators[i].action);
  }
  CHECK_THROWS_AS(generator_table(enumerate_strata(t, need - 1, betti), w), CoverageError);
  CHECK_THROWS_AS(strata_needed_for_window(ExponentTuple({2, 4, 4}), w), CoverageError);
  BettiTable stub = betti;
  stub.add_user({2, 4, 4}, {1, 0, 0, 1});
  const auto finite = generator_table(enumerate_strata(ExponentTuple({2, 4, 4}), 8, stub), std::nullopt);
  CHECK_FALSE(finite.window.has_value());
  CHECK(finite.generators.back().action == Rational(2));
}

TEST_CASE("index positivity") {
  const BettiTable betti = BettiTable::bundled(kData);
  auto classify = [&](std::vector<std::int64_t> a, bool filling = false) {
    const ExponentTuple t(a);
    return check_index_positivity(enumerate_strata(t, t.period(), betti), filling);
  };
  for (std::int64_t n = 3; n <= 7; ++n) {
    const auto r = classify(std::vector<std::int64_t>(n + 1, 2));
    CHECK(r.witness_L == 2);
    CHECK(r.witness_cz == n - 1);
    // Without a filling the summary theorem needs min CZ > 3.
    CHECK(r.theorem_case == (n >= 5 ? TheoremCase::SummaryTheoremLaurent : TheoremCase::NotApplicable));
    CHECK(classify(std::vector<std::int64_t>(n + 1, 2), true).theorem_case == TheoremCase::SummaryTheoremLaurent);
  }
  CHECK(classify({2, 2, 2, 2}).classification == IndexClass::IndexPositiveStrong);
  CHECK(classify({2, 2, 2, 2, 2, 2}).classification == IndexClass::ProductIndexPositive);

  const auto ak = classify({5, 2, 2});
  CHECK(ak.classification == IndexClass::NotIndexPositive);
  CHECK(ak.witness_L == 2);
  CHECK(ak.witness_cz == 1);
  CHECK(classify({5, 2, 2}, true).classification == IndexClass::NotIndexPositive);
  CHECK(classify({5, 2, 2}, true).filling_assumed);

  BettiTable stub = betti;
  stub.add_user({3, 3, 3}, {1, 0, 0, 1});
  const ExponentTuple zero({3, 3, 3});
  CHECK(check_index_positivity(enumerate_strata(zero, 3, stub), false).theorem_case == TheoremCase::NotApplicable);

  stub.add_user({3, 5, 7}, {1, 0, 0, 1});
  const ExponentTuple neg({7, 5, 3});
  CHECK(check_index_positivity(enumerate_strata(neg, neg.period(), stub), false).classification ==
        IndexClass::FailsForLargeL);
  CHECK_THROWS(check_index_positivity(enumerate_strata(neg, 3, stub), false));
}

TEST_CASE("virtual dimension") {
  CHECK(vdim({7}, {3}, {}, 4) == 4);
  CHECK(vdim({4, 6}, {5}, {}, 3) == 4 + 6 - 5 - 3);
  CHECK(vdim({5}, {4}, {2}, 3) == -1);
  CHECK_THROWS_AS(vdim({1}, {1}, {}, 0), ValidationError);

  // Gluing two cylinders along an orbit adds virtual dimensions.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 41) - 20;
    const std::int64_t b = static_cast<std::int64_t>(rng() % 41) - 20;
    const std::int64_t c = static_cast<std::int64_t>(rng() % 41) - 20;
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    CHECK(vdim({a}, {b}, {}, n) + vdim({b}, {c}, {}, n) == vdim({a}, {c}, {}, n));
  }
}

TEST_CASE("breaking exclusion") {
  for (std::int64_t n = 1; n <= 6; ++n) CHECK(breaking_excluded(n, n, 4));
  CHECK_FALSE(breaking_excluded(0, 0, 3));
  CHECK(breaking_excluded(0, 0, 4));
  // threshold max(3 − 5, 3 − 5) = −2 and −1 > −2
  CHECK(breaking_excluded(5, -5, -1));
  CHECK_FALSE(breaking_excluded(5, -5, -2));
}
