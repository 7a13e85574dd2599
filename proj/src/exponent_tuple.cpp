#include "brieskorn/exponent_tuple.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brieskorn/errors.hpp"

namespace brieskorn {

std::string to_string(ShiftClass c) {
  switch (c) {
    case ShiftClass::Positive:
      return "PositiveShift";
    case ShiftClass::Zero:
      return "ZeroShift";
    case ShiftClass::Negative:
      return "NegativeShift";
  }
  return "?";
}

std::string join_key(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

MissingBettiError::MissingBettiError(std::vector<std::int64_t> sub_tuple)
    : std::runtime_error("no GF(2) Betti data for sub-tuple (" + join_key(sub_tuple) + ")"),
      sub_tuple_(std::move(sub_tuple)) {}

ExponentTuple::ExponentTuple(std::vector<std::int64_t> exponents) : a_(std::move(exponents)) {
  if (a_.size() < 2) {
    throw ValidationError("need at least two exponents, got " + std::to_string(a_.size()));
  }
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (a_[j] < 2) {
      throw ValidationError("exponent a_" + std::to_string(j) + " = " + std::to_string(a_[j]) +
                            " is below 2");
    }
  }

  std::int64_t l = 1;
  for (std::int64_t a : a_) {
    std::int64_t q = a / std::gcd(l, a);
    if (__builtin_mul_overflow(l, q, &l)) {
      throw ValidationError("period lcm(" + join_key(a_) + ") overflows 64 bits");
    }
  }
  period_ = l;

  std::int64_t sum = 0;
  for (std::int64_t a : a_) {
    if (__builtin_add_overflow(sum, period_ / a, &sum)) {
      throw ValidationError("Maslov index of (" + join_key(a_) + ") overflows 64 bits");
    }
  }
  maslov_ = sum - period_;
}

ShiftClass ExponentTuple::shift_class() const noexcept {
  // maslov = L_P·(Σ 1/a_j − 1) with L_P > 0, so its sign is the sign of the
  // rational difference.
  if (maslov_ > 0) return ShiftClass::Positive;
  if (maslov_ < 0) return ShiftClass::Negative;
  return ShiftClass::Zero;
}

std::vector<std::int64_t> ExponentTuple::sorted() const {
  std::vector<std::int64_t> out = a_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brieskorn
