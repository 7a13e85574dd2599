#include <doctest.h>

#include <random>

#include <omp.h>

#include "brieskorn/gf2.hpp"

using namespace brieskorn::gf2;

namespace {

// Plain elimination over std::vector<bool>, kept independent of BitMatrix.
std::size_t rank_oracle(std::vector<std::vector<bool>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density,
                        std::vector<std::vector<bool>>* copy) {
  BitMatrix m(rows, cols);
  copy->assign(rows, std::vector<bool>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() % 100 < density) {
        m.set(r, c);
        (*copy)[r][c] = true;
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank of structured matrices") {
  BitMatrix zero(5, 7);
  CHECK(rank_serial(zero) == 0);
  BitMatrix id(70, 70);
  for (std::size_t i = 0; i < 70; ++i) id.set(i, i);
  CHECK(rank_serial(id) == 70);
  CHECK(rank_omp(id) == 70);
  BitMatrix dup(3, 4);
  for (std::size_t r = 0; r < 3; ++r) dup.set(r, 2);
  CHECK(rank_serial(dup) == 1);
  CHECK(rank_serial(BitMatrix()) == 0);
  dup.flip(0, 2);
  CHECK_FALSE(dup.get(0, 2));
}

TEST_CASE("rank against the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 90, cols = 1 + rng() % 150;
    std::vector<std::vector<bool>> copy;
    const BitMatrix m = random_matrix(rng, rows, cols, 5 + rng() % 50, &copy);
    CHECK(rank_serial(m) == rank_oracle(copy, cols));
  }
}

TEST_CASE("OpenMP rank equals serial rank") {
  std::mt19937_64 rng(23);
  const int saved = omp_get_max_threads();
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t rows = 300 + rng() % 400, cols = 200 + rng() % 500;
    std::vector<std::vector<bool>> copy;
    const BitMatrix m = random_matrix(rng, rows, cols, 2 + rng() % 20, &copy);
    const std::size_t ref = rank_serial(m);
    CHECK(ref == rank_oracle(copy, cols));
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      CHECK(rank_omp(m) == ref);
    }
  }
  omp_set_num_threads(saved);
}
