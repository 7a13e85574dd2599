#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/grading.hpp"
#include "brieskorn/window.hpp"

namespace brieskorn {

enum class ModuleMode { LaurentModule, LaurentSeriesVectorSpace };

std::string to_string(ModuleMode m);

/// Graded dimensions of a free Z₂[s, s⁻¹]-module with generators in the
/// given degrees and |s| = mu_p: dim(d) = #{(e, k) : e + k·mu_p = d}.
/// With mu_p = 0 the base ring becomes a field of Laurent series and only
/// the generator degrees are meaningful.
struct PeriodicGradedDims {
  std::vector<std::int64_t> period_degrees;  // sorted, with multiplicity
  std::int64_t mu_p = 0;

  PeriodicGradedDims() = default;
  PeriodicGradedDims(std::vector<std::int64_t> degrees, std::int64_t mu);

  std::int64_t rank() const noexcept { return static_cast<std::int64_t>(period_degrees.size()); }
  ModuleMode mode() const noexcept {
    return mu_p == 0 ? ModuleMode::LaurentSeriesVectorSpace : ModuleMode::LaurentModule;
  }
  /// max − min of period_degrees, 0 when empty.
  std::int64_t span() const noexcept;
};

/// Generator degrees in the action window [0, 1): the constants together
/// with the strata 1 ≤ L ≤ L_P − 1. `strata` must reach L_P − 1.
PeriodicGradedDims period_module(const StrataList& strata);

/// Exact per-degree dimensions over [lo, hi]. Throws ModeError for mu_p = 0.
DegreeDims dims_in_window(const PeriodicGradedDims& m, DegreeWindow w);

/// Same count restricted to non-negative s-powers.
DegreeDims positive_part(const PeriodicGradedDims& m, DegreeWindow w);

enum class VanishingStatus { VanishingProven, Unknown, VanishingByOverride };

std::string to_string(VanishingStatus s);

struct DifferentialStatus {
  VanishingStatus status = VanishingStatus::Unknown;
  // (x, y) with action(x) > action(y) and deg(x) = deg(y) + 1: possible
  // nonzero matrix entries ⟨∂x, y⟩.
  std::vector<std::pair<Generator, Generator>> witnesses;
  std::string provenance;
};

/// Number of periods B the differential scan must see above the fundamental
/// window: ceil((span + 1)/|μ_P|) + 1, or 1 when μ_P = 0.
std::int64_t scan_periods(const PeriodicGradedDims& m);

/// Largest L a generator table must include for the scan, B·L_P.
std::int64_t scan_max_L(const ExponentTuple& t, const PeriodicGradedDims& m);

/// Looks for pairs that degree and action allow to carry a differential,
/// with y ranging over the fundamental window and x over all generators of
/// higher action in `table`. Pairs inside one stratum are skipped (perfect
/// Morse functions). Runs the outer loop with OpenMP; the witness order is
/// independent of the thread count.
///
/// `override_provenance` marks vanishing established elsewhere; it is only
/// consulted when witnesses exist. The table must be unwindowed and reach
/// scan_max_L, otherwise CoverageError.
DifferentialStatus detect_vanishing_differential(const GeneratorTable& table,
                                                 const std::optional<std::string>& override_provenance);

/// Serial scan with the same contract, kept as a reference for testing.
DifferentialStatus detect_vanishing_differential_serial(const GeneratorTable& table,
                                                        const std::optional<std::string>& override_provenance);

struct HomologyTable {
  DegreeDims dims;
  VanishingStatus status;
  std::string provenance;
};

/// Homology of the complex when the differential vanishes. Throws
/// ValidationError listing the witnesses when the status is Unknown.
HomologyTable homology_table(const PeriodicGradedDims& m, const DifferentialStatus& status, DegreeWindow w);

}  // namespace brieskorn
