#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/strata.hpp"
#include "brieskorn/window.hpp"

namespace brieskorn {

using Rational = boost::rational<std::int64_t>;

/// Chain generator [N_L, η]: a critical point of Morse index `morse_index`
/// of a perfect Morse function on the stratum at time L. `multiplicity`
/// is the Betti number b_ind, i.e. the number of such critical points.
struct Generator {
  std::int64_t stratum_L = 0;
  std::int64_t morse_index = 0;
  std::int64_t product_degree = 0;
  std::int64_t cz_degree = 0;
  Rational action{0};
  std::int64_t multiplicity = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Product degree of the minimum of stratum s. For L ≥ 1 this is
// μ_RS − (dim − 1)/2 − n; for the constants it is −(2n − 1).
std::int64_t stratum_base_degree(const ExponentTuple& t, const Stratum& s);

std::int64_t product_degree(const ExponentTuple& t, const Stratum& s, std::int64_t morse_index);

/// Generators of one stratum in Morse-index order, skipping b_ind = 0.
std::vector<Generator> stratum_generators(const ExponentTuple& t, const Stratum& s);

struct GeneratorTable {
  ExponentTuple tuple;
  std::int64_t max_L = 0;
  std::optional<DegreeWindow> window;  // nullopt: every generator with L <= max_L
  std::vector<Generator> generators;   // sorted by (action, degree, morse index)
};

/// Smallest max_L such that every generator with product degree in `w`
/// lives on a stratum with L ≤ max_L. Needs μ_P ≠ 0; throws CoverageError
/// ("needs-finite-period-window") otherwise.
std::int64_t strata_needed_for_window(const ExponentTuple& t, DegreeWindow w);

/// With a window, verifies that `strata` reach far enough and keeps only
/// generators with degree inside it. Without one, lists every generator of
/// the supplied strata (a finite action window).
GeneratorTable generator_table(const StrataList& strata, std::optional<DegreeWindow> window);

/// The principal orbit s = [N_{L_P}, max]: degree μ_P, action 1.
Generator s_class(const ExponentTuple& t);

enum class IndexClass {
  ProductIndexPositive,      // min CZ > 3
  IndexPositiveStrong,       // min CZ > 4 − n
  IndexPositiveWithFilling,  // min CZ > 3 − n, filling with c_1 = 0 assumed
  NotIndexPositive,
  FailsForLargeL,  // μ_P < 0: indices drift to −∞ along iterates
};

enum class TheoremCase { SummaryTheoremLaurent, SummaryTheoremLaurentSeries, NotApplicable };

std::string to_string(IndexClass c);
std::string to_string(TheoremCase c);

struct IndexReport {
  IndexClass classification = IndexClass::NotIndexPositive;
  std::int64_t witness_L = 0;
  std::int64_t witness_cz = 0;
  TheoremCase theorem_case = TheoremCase::NotApplicable;
  bool filling_assumed = false;
  std::string convention = "Morse-Bott minimum convention";
};

/// Minimal CZ index μ_RS − (dim − 1)/2 realised on a stratum with L ≥ 1.
std::int64_t stratum_min_cz(const Stratum& s);

/// Classifies using the strata 1 ≤ L ≤ L_P of `strata` (which must reach
/// L_P). Equality with a threshold counts as failure. Ties for the witness
/// go to the smallest L.
IndexReport check_index_positivity(const StrataList& strata, bool filling_assumed);

/// Σμ(Γ⁺) − Σμ(Γ⁻) + n(2 − |Γ⁺| − |Γ⁻|) − Σ_j (μ(c_j) + n − 3).
std::int64_t virtual_dimension(std::span<const std::int64_t> gamma_plus,
                               std::span<const std::int64_t> gamma_minus,
                               std::span<const std::int64_t> reeb_cz, std::int64_t n);

/// min_reeb_cz > max{3 − |mu1|, 3 − |mu2|}.
bool breaking_excluded(std::int64_t mu1, std::int64_t mu2, std::int64_t min_reeb_cz);

}  // namespace brieskorn
