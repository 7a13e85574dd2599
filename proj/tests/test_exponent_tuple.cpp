#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/rational.hpp>

#include "brieskorn/errors.hpp"
#include "brieskorn/exponent_tuple.hpp"

using namespace brieskorn;

namespace {

// I(g)/L_P = Σ 1/a_j − 1, evaluated in exact rationals.
boost::rational<std::int64_t> normalized_maslov(const std::vector<std::int64_t>& a) {
  boost::rational<std::int64_t> s(-1);
  for (auto x : a) s += boost::rational<std::int64_t>(1, x);
  return s;
}

}  // namespace

TEST_CASE("period and Maslov index of small tuples") {
  struct Row {
    std::vector<std::int64_t> a;
    std::int64_t lp, maslov, mu;
  };
  for (const Row& r : {Row{{2, 2, 2, 2}, 2, 2, 4}, Row{{6, 2, 2, 2}, 6, 4, 8}, Row{{2, 4, 4}, 4, 0, 0},
                       Row{{5, 2, 2}, 10, 2, 4}, Row{{4, 2, 2}, 4, 1, 2}}) {
    CAPTURE(r.a);
    const ExponentTuple t(r.a);
    CHECK(t.period() == r.lp);
    CHECK(t.maslov() == r.maslov);
    CHECK(t.mu_p() == r.mu);
  }
}

TEST_CASE("dimension bookkeeping") {
  const ExponentTuple t({3, 4, 5, 6});
  CHECK(t.n() == 3);
  CHECK(t.dim_sigma() == 5);
  CHECK(t.sorted() == std::vector<std::int64_t>{3, 4, 5, 6});
}

TEST_CASE("shift classification") {
  CHECK(ExponentTuple({4, 2, 2}).shift_class() == ShiftClass::Positive);
  CHECK(ExponentTuple({3, 3, 3}).shift_class() == ShiftClass::Zero);
  CHECK(ExponentTuple({2, 3, 6}).shift_class() == ShiftClass::Zero);
  CHECK(ExponentTuple({7, 5, 3}).shift_class() == ShiftClass::Negative);
  CHECK(to_string(ShiftClass::Zero) == "ZeroShift");
}

TEST_CASE("invalid tuples are rejected") {
  CHECK_THROWS_AS(ExponentTuple({1, 2}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({5}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({2, 0, 3}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({2, -3}), ValidationError);
}

TEST_CASE("period overflow is reported, not wrapped") {
  // Product of the first 16 primes exceeds 2^63.
  std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  CHECK_THROWS_AS(ExponentTuple{primes}, ValidationError);
}

TEST_CASE("random tuples: permutation invariance and the rational identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> a(2 + rng() % 6);
    for (auto& x : a) x = 2 + static_cast<std::int64_t>(rng() % 11);
    const ExponentTuple t(a);

    std::int64_t lcm = 1;
    for (auto x : a) lcm = std::lcm(lcm, x);
    REQUIRE(t.period() == lcm);
    CHECK(boost::rational<std::int64_t>(t.maslov(), t.period()) == normalized_maslov(a));
    CHECK(t.mu_p() % 2 == 0);

    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    const ExponentTuple u(b);
    CHECK(u.period() == t.period());
    CHECK(u.maslov() == t.maslov());
    CHECK(u.shift_class() == t.shift_class());
  }
}
