#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brieskorn {

// Exit codes used by the command-line tool. Library code throws; the tool
// maps each exception type onto one of these.
enum class ExitCode : int {
  Ok = 0,
  Validation = 2,
  MissingBetti = 3,
  UnknownExample = 4,
  Unconverged = 5,
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No Betti data for a stratum. Carries the sorted exponent sub-tuple so a
// caller can print a config stub for it.
class MissingBettiError : public std::runtime_error {
 public:
  explicit MissingBettiError(std::vector<std::int64_t> sub_tuple);

  const std::vector<std::int64_t>& sub_tuple() const noexcept { return sub_tuple_; }

 private:
  std::vector<std::int64_t> sub_tuple_;
};

// The supplied strata do not reach far enough to answer a question exactly.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A per-degree dimension was requested for a Laurent-series (zero shift)
// module, where every degree is infinite dimensional over GF(2).
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnconvergedError : public std::runtime_error {
 public:
  UnconvergedError(const std::string& what, std::vector<std::int64_t> degrees)
      : std::runtime_error(what), degrees_(std::move(degrees)) {}

  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

 private:
  std::vector<std::int64_t> degrees_;
};

class UnknownExampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Comma-joined form used as Betti table key, e.g. "2,2,2,4".
std::string join_key(const std::vector<std::int64_t>& values);

}  // namespace brieskorn
