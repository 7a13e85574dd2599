#include "brieskorn/gf2.hpp"

#include <utility>

namespace brieskorn::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

namespace {

// Returns the index of a row in [from, rows) with bit `col` set, or rows.
std::size_t find_pivot(const BitMatrix& m, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m.get(r, col)) return r;
  }
  return m.rows();
}

void swap_rows(BitMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t w = 0; w < ra.size(); ++w) std::swap(ra[w], rb[w]);
}

void eliminate_below(BitMatrix& m, std::size_t pivot, std::size_t col, std::size_t first_word) {
  const auto p = m.row(pivot);
  for (std::size_t r = pivot + 1; r < m.rows(); ++r) {
    if (!m.get(r, col)) continue;
    auto row = m.row(r);
    for (std::size_t w = first_word; w < row.size(); ++w) row[w] ^= p[w];
  }
}

constexpr std::size_t kParallelRows = 256;

}  // namespace

std::size_t rank_serial(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t piv = find_pivot(m, rank, col);
    if (piv == m.rows()) continue;
    swap_rows(m, rank, piv);
    eliminate_below(m, rank, col, col / 64);
    ++rank;
  }
  return rank;
}

std::size_t rank_omp(BitMatrix m) {
  if (m.rows() < kParallelRows) return rank_serial(std::move(m));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t piv = find_pivot(m, rank, col);
    if (piv == m.rows()) continue;
    swap_rows(m, rank, piv);
    const std::size_t first_word = col / 64;
    const auto p = m.row(rank);
    const auto begin = static_cast<std::int64_t>(rank + 1);
    const auto end = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = begin; r < end; ++r) {
      const auto ru = static_cast<std::size_t>(r);
      if (!m.get(ru, col)) continue;
      auto row = m.row(ru);
      for (std::size_t w = first_word; w < row.size(); ++w) row[w] ^= p[w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace brieskorn::gf2
