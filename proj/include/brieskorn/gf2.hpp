#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace brieskorn::gf2 {

/// Dense matrix over GF(2), one bit-packed row per relation.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  void set(std::size_t r, std::size_t c) noexcept { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * words_, words_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Rank by Gaussian elimination, single thread. Reference implementation.
std::size_t rank_serial(BitMatrix m);

/// Same elimination with the row-update sweep split across OpenMP threads.
/// Falls back to the serial sweep for small matrices.
std::size_t rank_omp(BitMatrix m);

}  // namespace brieskorn::gf2
