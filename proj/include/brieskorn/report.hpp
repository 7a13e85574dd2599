#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/graded_algebra.hpp"
#include "brieskorn/strata.hpp"
#include "brieskorn/window.hpp"

namespace brieskorn {

inline constexpr const char* kToolName = "brieskorn";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_format(const std::string& s);

// Shared inputs of every report. `args` is echoed verbatim into the
// provenance block.
struct ReportContext {
  std::vector<std::string> args;
  OutputFormat format = OutputFormat::Json;
  std::filesystem::path data_dir;
  std::vector<std::filesystem::path> betti_files;

  BettiTable betti_table() const;
};

std::string report_info(const std::vector<std::int64_t>& exponents, const ReportContext& ctx);

std::string report_strata(const std::vector<std::int64_t>& exponents, std::int64_t max_L, const ReportContext& ctx);

std::string report_generators(const std::vector<std::int64_t>& exponents, DegreeWindow window,
                              const ReportContext& ctx);

std::string report_module(const std::vector<std::int64_t>& exponents, DegreeWindow window,
                          const std::optional<std::string>& external_vanishing, const ReportContext& ctx);

std::string report_check_index(const std::vector<std::int64_t>& exponents, bool filling_assumed,
                               const ReportContext& ctx);

struct AlgebraRequest {
  DegreeWindow window;
  std::int64_t start_cap = 1;
  std::int64_t max_cap = 24;
  // Optional comparison target: the module of this tuple, or its positive part.
  std::optional<std::vector<std::int64_t>> compare_tuple;
  bool compare_positive_part = false;
  // Also run the standard-monomial count (monomial relations only).
  bool monomial_check = false;
};

/// Throws UnconvergedError if the Hilbert function does not stabilize.
std::string report_algebra(const GradedPresentation& p, const AlgebraRequest& req, const ReportContext& ctx);

std::string report_virtual_dim(const std::vector<std::int64_t>& plus, const std::vector<std::int64_t>& minus,
                               const std::vector<std::int64_t>& reeb, std::int64_t n, const ReportContext& ctx);

/// JSON stub for a missing Betti entry, to be filled in by the user.
std::string betti_stub(const std::vector<std::int64_t>& sub_tuple);

}  // namespace brieskorn
