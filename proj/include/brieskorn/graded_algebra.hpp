#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/window.hpp"

namespace brieskorn {

struct AlgebraGenerator {
  std::string name;
  std::int64_t degree = 0;
};

/// Exponent vector indexed like GradedPresentation::generators().
using Monomial = std::vector<std::uint32_t>;

/// A GF(2) sum of monomials set to zero. Repeated monomials cancel.
struct Relation {
  std::vector<Monomial> terms;
};

/// Commutative graded algebra over GF(2): free on the generators modulo the
/// relations. Generator degrees may be negative; an inverse is a separate
/// generator together with the relation x·x_inv + 1.
class GradedPresentation {
 public:
  /// Each relation is a list of monomials, each monomial a list of
  /// generator names with multiplicity ([] is the unit). Throws
  /// ValidationError on unknown or duplicate names and on inhomogeneous
  /// relations, naming the offending relation.
  GradedPresentation(std::vector<AlgebraGenerator> generators,
                     const std::vector<std::vector<std::vector<std::string>>>& relations, std::string name = {});

  /// {"name": ..., "generators": [{"name", "degree"}], "relations": [[monomial, ...], ...]}
  static GradedPresentation from_json(std::string_view text, const std::string& origin = "<memory>");
  static GradedPresentation from_file(const std::filesystem::path& file);
  std::string to_json() const;

  const std::string& name() const noexcept { return name_; }
  const std::vector<AlgebraGenerator>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  std::int64_t degree(const Monomial& m) const;
  static std::int64_t length(const Monomial& m);
  std::string render(const Monomial& m) const;
  std::string render(const Relation& r) const;

  /// Every relation has at most one term.
  bool is_monomial() const;

 private:
  std::string name_;
  std::vector<AlgebraGenerator> generators_;
  std::vector<Relation> relations_;
};

enum class Execution { Serial, Parallel };

struct HilbertResult {
  DegreeDims dims;       // at `cap`
  DegreeDims dims_next;  // at `cap + 1`
  std::int64_t cap = 0;
  bool converged = false;
  std::vector<std::int64_t> unconverged_degrees;
};

/// Per-degree dimension of the quotient truncated to words of length
/// ≤ cap: (#monomials of degree d) − rank of the relation multiples whose
/// terms all have length ≤ cap. Degrees are independent; Parallel splits
/// them across OpenMP threads. Results do not depend on the split.
DegreeDims hilbert_dims_at_cap(const GradedPresentation& p, DegreeWindow w, std::int64_t cap,
                               Execution exec = Execution::Parallel);

/// Dimensions at `cap` and `cap + 1`; converged iff they agree on `w`.
HilbertResult hilbert_function(const GradedPresentation& p, DegreeWindow w, std::int64_t word_cap,
                               Execution exec = Execution::Parallel);

/// Raises the cap from `start_cap` until two consecutive caps agree or
/// `max_cap` is reached. The result carries the flag either way.
HilbertResult stabilized_hilbert(const GradedPresentation& p, DegreeWindow w, std::int64_t start_cap,
                                 std::int64_t max_cap, Execution exec = Execution::Parallel);

/// Counts standard monomials (divisible by no relation monomial) of length
/// ≤ cap. Only for presentations whose relations are single monomials.
DegreeDims monomial_quotient_dims_at_cap(const GradedPresentation& p, DegreeWindow w, std::int64_t cap);

/// Stabilized count, same two-cap policy as stabilized_hilbert.
HilbertResult monomial_quotient_dims(const GradedPresentation& p, DegreeWindow w, std::int64_t max_cap = 64);

struct Mismatch {
  std::int64_t degree = 0;
  std::int64_t algebra = 0;
  std::int64_t module = 0;
};

struct ComparisonReport {
  std::vector<Mismatch> mismatches;
  std::int64_t cap = 0;
  bool consistent() const noexcept { return mismatches.empty(); }
};

/// Degreewise diff between the algebra's Hilbert function and `target`
/// over `w`. Throws UnconvergedError if the algebra side has not
/// stabilized by `max_cap`.
ComparisonReport compare_to_module(const GradedPresentation& p, const DegreeDims& target, DegreeWindow w,
                                   std::int64_t max_cap, Execution exec = Execution::Parallel);

}  // namespace brieskorn
