#include <doctest.h>

#include <omp.h>

#include "brieskorn/errors.hpp"
#include "brieskorn/graded_algebra.hpp"
#include "brieskorn/presentations.hpp"

using namespace brieskorn;

namespace {

std::vector<std::int64_t> values(const DegreeDims& d) {
  std::vector<std::int64_t> v;
  for (const auto& [k, x] : d) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("truncated polynomial rings") {
  const GradedPresentation free1({{"x", 1}}, {}, "free");
  CHECK(values(stabilized_hilbert(free1, {0, 5}, 1, 20).dims) == std::vector<std::int64_t>(6, 1));

  const GradedPresentation cubic({{"x", 1}}, {{{"x", "x", "x"}}}, "cubic");
  const auto h = stabilized_hilbert(cubic, {0, 5}, 1, 20);
  CHECK(h.converged);
  CHECK(values(h.dims) == std::vector<std::int64_t>{1, 1, 1, 0, 0, 0});
  CHECK(values(monomial_quotient_dims(cubic, {0, 5}).dims) == std::vector<std::int64_t>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("two generators with a binomial relation") {
  // Z2[x, y]/(x^2 + y^2), |x| = |y| = 1: dims 1, 2, 2, 2, ...
  const GradedPresentation p({{"x", 1}, {"y", 1}}, {{{"x", "x"}, {"y", "y"}}}, "binomial");
  const auto h = stabilized_hilbert(p, {0, 6}, 1, 20);
  CHECK(values(h.dims) == std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("repeated terms cancel mod 2") {
  const GradedPresentation p({{"x", 1}, {"y", 1}}, {{{"x", "y"}, {"y", "x"}}}, "cancel");
  CHECK(p.relations()[0].terms.empty());
  CHECK(values(stabilized_hilbert(p, {0, 3}, 1, 20).dims) == std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("Laurent ring Z2[a,u,u^-1]/(a^2)") {
  for (std::int64_t n = 3; n <= 5; ++n) {
    const auto p = presentations::cotangent_sphere_ring(n);
    const auto h = stabilized_hilbert(p, {-12, 12}, 1, 40);
    REQUIRE(h.converged);
    for (std::int64_t d = -12; d + (n - 1) <= 12; ++d) CHECK(h.dims.at(d) == h.dims.at(d + n - 1));
    if (n == 3) {
      for (const auto& [d, v] : h.dims) CHECK(v == 1);
    }
  }
}

TEST_CASE("A_k Milnor fibre presentations: two independent counts agree") {
  const auto p2 = presentations::ak_milnor_fibre_even(2);
  CHECK(stabilized_hilbert(p2, {0, 0}, 1, 20).dims.at(0) == 2);
  for (std::int64_t k : {2, 4, 6}) {
    const auto p = presentations::ak_milnor_fibre_even(k);
    const auto a = stabilized_hilbert(p, {-6, 6}, 1, 40);
    const auto b = monomial_quotient_dims(p, {-6, 6});
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(a.dims == b.dims);
  }
}

TEST_CASE("odd A_k presentation") {
  const auto p = presentations::ak_milnor_fibre_odd(5);
  const auto h = stabilized_hilbert(p, {-6, 6}, 1, 40);
  CHECK(h.converged);
  CHECK(h.dims.at(0) >= 1);
  CHECK_FALSE(p.is_monomial());
  CHECK_THROWS_AS(monomial_quotient_dims(p, {-6, 6}), ValidationError);
  // Published with u_{-1}^2 = t_0^{n-1}, which is not homogeneous.
  CHECK_THROWS_AS(presentations::ak_milnor_fibre_odd(3), ValidationError);
  CHECK_THROWS_AS(presentations::ak_milnor_fibre_odd(4), ValidationError);
}

TEST_CASE("serial and parallel Hilbert functions agree for every partition") {
  const int saved = omp_get_max_threads();
  for (const auto& p : {presentations::ak_milnor_fibre_even(4), presentations::cotangent_sphere_ring(4),
                        presentations::ak_milnor_fibre_odd(5)}) {
    for (std::int64_t cap : {3, 6, 9}) {
      const auto ref = hilbert_dims_at_cap(p, {-8, 8}, cap, Execution::Serial);
      for (int threads : {1, 2, 5}) {
        omp_set_num_threads(threads);
        CHECK(hilbert_dims_at_cap(p, {-8, 8}, cap, Execution::Parallel) == ref);
      }
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("unconverged computations are flagged") {
  // Z2[u, v] with |u| = 2, |v| = −2: degree 0 holds every (uv)^k.
  const GradedPresentation p({{"u", 2}, {"v", -2}}, {}, "unbounded");
  const auto h = stabilized_hilbert(p, {-2, 2}, 1, 8);
  CHECK_FALSE(h.converged);
  CHECK_FALSE(h.unconverged_degrees.empty());
  try {
    compare_to_module(p, zero_dims({-2, 2}), {-2, 2}, 8);
    FAIL("expected UnconvergedError");
  } catch (const UnconvergedError& e) {
    CHECK(e.degrees() == h.unconverged_degrees);
  }
}

TEST_CASE("comparison lists offending degrees") {
  const GradedPresentation cubic({{"x", 1}}, {{{"x", "x", "x"}}}, "cubic");
  DegreeDims target = zero_dims({0, 4});
  for (std::int64_t d = 0; d <= 4; ++d) target[d] = 1;
  const auto r = compare_to_module(cubic, target, {0, 4}, 20);
  REQUIRE(r.mismatches.size() == 2);
  CHECK(r.mismatches[0].degree == 3);
  CHECK(r.mismatches[0].algebra == 0);
  CHECK(r.mismatches[0].module == 1);
  CHECK(r.mismatches[1].degree == 4);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(GradedPresentation({{"x", 1}}, {{{"y"}}}), ValidationError);
  CHECK_THROWS_AS(GradedPresentation({{"x", 1}, {"x", 2}}, {}), ValidationError);
  try {
    GradedPresentation({{"x", 1}, {"y", 2}}, {{{"x", "x"}}, {{"x"}, {"y"}}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("relation 1") != std::string::npos);
  }
}

TEST_CASE("JSON round trip") {
  const auto p = presentations::ak_milnor_fibre_even(2);
  const auto q = GradedPresentation::from_json(p.to_json());
  CHECK(q.name() == p.name());
  CHECK(q.to_json() == p.to_json());
  CHECK(q.relations().size() == p.relations().size());
  CHECK_THROWS_AS(GradedPresentation::from_json("{\"generators\": 3}"), ValidationError);
  CHECK_THROWS_AS(GradedPresentation::from_json("not json"), ValidationError);
  CHECK_THROWS_AS(GradedPresentation::from_file("/nonexistent.json"), ValidationError);
}
