#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

enum class ShiftClass { Positive, Zero, Negative };

std::string to_string(ShiftClass c);

/// Exponents (a_0, ..., a_n) of the Brieskorn manifold
/// {z_0^a_0 + ... + z_n^a_n = 0} ∩ S^{2n+1}, with the integer constants
/// that govern its Reeb flow.
///
/// Times are kept as integers L meaning L·π/2; the Reeb period is
/// period() = lcm(a_j). maslov() is the Maslov index of the Reeb loop,
/// Σ L_P/a_j − L_P, and mu_p() = 2·maslov() is the product degree of the
/// principal orbit.
class ExponentTuple {
 public:
  /// Throws ValidationError for fewer than two entries, an entry below 2,
  /// or a period that does not fit in 64 bits.
  explicit ExponentTuple(std::vector<std::int64_t> exponents);

  std::span<const std::int64_t> exponents() const noexcept { return a_; }
  std::int64_t exponent(std::size_t j) const { return a_.at(j); }
  std::size_t size() const noexcept { return a_.size(); }

  /// Complex dimension parameter: number of exponents minus one.
  std::int64_t n() const noexcept { return static_cast<std::int64_t>(a_.size()) - 1; }
  std::int64_t dim_sigma() const noexcept { return 2 * n() - 1; }
  std::int64_t period() const noexcept { return period_; }
  std::int64_t maslov() const noexcept { return maslov_; }
  std::int64_t mu_p() const noexcept { return 2 * maslov_; }

  ShiftClass shift_class() const noexcept;

  /// Sorted copy of the exponents, the canonical key for tables.
  std::vector<std::int64_t> sorted() const;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<std::int64_t> a_;
  std::int64_t period_ = 0;
  std::int64_t maslov_ = 0;
};

inline ShiftClass shift_classification(const ExponentTuple& t) { return t.shift_class(); }

}  // namespace brieskorn
