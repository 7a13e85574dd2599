#include "brieskorn/module_analysis.hpp"

#include <algorithm>
#include <sstream>

#include "brieskorn/errors.hpp"

namespace brieskorn {

std::string to_string(ModuleMode m) {
  return m == ModuleMode::LaurentModule ? "LaurentModule" : "LaurentSeriesVectorSpace";
}

std::string to_string(VanishingStatus s) {
  switch (s) {
    case VanishingStatus::VanishingProven:
      return "VanishingProven";
    case VanishingStatus::Unknown:
      return "Unknown";
    case VanishingStatus::VanishingByOverride:
      return "VanishingByOverride";
  }
  return "?";
}

PeriodicGradedDims::PeriodicGradedDims(std::vector<std::int64_t> degrees, std::int64_t mu)
    : period_degrees(std::move(degrees)), mu_p(mu) {
  std::sort(period_degrees.begin(), period_degrees.end());
}

std::int64_t PeriodicGradedDims::span() const noexcept {
  if (period_degrees.empty()) return 0;
  return period_degrees.back() - period_degrees.front();
}

PeriodicGradedDims period_module(const StrataList& strata) {
  const ExponentTuple& t = strata.tuple;
  if (strata.max_L < t.period() - 1) {
    throw CoverageError("period module needs strata through L = " + std::to_string(t.period() - 1));
  }
  std::vector<std::int64_t> degrees;
  for (const Stratum& s : strata.strata) {
    if (s.L >= t.period()) break;
    for (const Generator& g : stratum_generators(t, s)) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(g.multiplicity), g.product_degree);
    }
  }
  return PeriodicGradedDims(std::move(degrees), t.mu_p());
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Adds one for every d = e + k·mu in w with k ≥ k_min.
void accumulate_orbit(DegreeDims& out, std::int64_t e, std::int64_t mu, DegreeWindow w,
                      std::optional<std::int64_t> k_min) {
  const std::int64_t step = mu < 0 ? -mu : mu;
  // first d ≥ lo with d ≡ e (mod step)
  std::int64_t d = e + step * (floor_div(w.lo - e - 1, step) + 1);
  for (; d <= w.hi; d += step) {
    if (k_min && (d - e) / mu < *k_min) continue;
    ++out[d];
  }
}

void require_laurent(const PeriodicGradedDims& m) {
  if (m.mu_p == 0) {
    throw ModeError(
        "zero index shift: the module is a finite-dimensional vector space over the Laurent-series "
        "field Z2[s][[s^-1]], so each degree is infinite-dimensional over Z2");
  }
}

}  // namespace

DegreeDims dims_in_window(const PeriodicGradedDims& m, DegreeWindow w) {
  require_laurent(m);
  if (w.lo > w.hi) throw ValidationError("degree window lo > hi");
  DegreeDims out = zero_dims(w);
  for (std::int64_t e : m.period_degrees) accumulate_orbit(out, e, m.mu_p, w, std::nullopt);
  return out;
}

DegreeDims positive_part(const PeriodicGradedDims& m, DegreeWindow w) {
  require_laurent(m);
  if (w.lo > w.hi) throw ValidationError("degree window lo > hi");
  DegreeDims out = zero_dims(w);
  for (std::int64_t e : m.period_degrees) accumulate_orbit(out, e, m.mu_p, w, std::int64_t{0});
  return out;
}

std::int64_t scan_periods(const PeriodicGradedDims& m) {
  if (m.mu_p == 0) return 1;
  const std::int64_t step = m.mu_p < 0 ? -m.mu_p : m.mu_p;
  return (m.span() + 1 + step - 1) / step + 1;
}

std::int64_t scan_max_L(const ExponentTuple& t, const PeriodicGradedDims& m) {
  return scan_periods(m) * t.period();
}

namespace {

void check_scan_coverage(const GeneratorTable& table) {
  if (table.window) {
    throw CoverageError("differential scan needs an unwindowed generator table");
  }
  const ExponentTuple& t = table.tuple;
  std::vector<std::int64_t> degrees;
  for (const Generator& g : table.generators) {
    if (g.stratum_L < t.period()) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(g.multiplicity), g.product_degree);
    }
  }
  const PeriodicGradedDims m(std::move(degrees), t.mu_p());
  const std::int64_t need = scan_max_L(t, m);
  if (table.max_L < need) {
    throw CoverageError("differential scan needs strata through L = " + std::to_string(need) +
                        ", table stops at " + std::to_string(table.max_L));
  }
}

std::vector<std::pair<Generator, Generator>> witnesses_for(const GeneratorTable& table, std::size_t yi) {
  std::vector<std::pair<Generator, Generator>> found;
  const Generator& y = table.generators[yi];
  for (const Generator& x : table.generators) {
    if (x.action > y.action && x.stratum_L != y.stratum_L && x.product_degree == y.product_degree + 1) {
      found.emplace_back(x, y);
    }
  }
  return found;
}

DifferentialStatus finish(std::vector<std::vector<std::pair<Generator, Generator>>> buckets,
                          const std::optional<std::string>& override_provenance) {
  DifferentialStatus status;
  for (auto& b : buckets) {
    status.witnesses.insert(status.witnesses.end(), b.begin(), b.end());
  }
  if (status.witnesses.empty()) {
    status.status = VanishingStatus::VanishingProven;
    status.provenance = "degree and action";
  } else if (override_provenance) {
    status.status = VanishingStatus::VanishingByOverride;
    status.provenance = *override_provenance;
  } else {
    status.status = VanishingStatus::Unknown;
    status.provenance = "witness pairs found; pass an external-vanishing override to proceed";
  }
  return status;
}

std::vector<std::size_t> fundamental_indices(const GeneratorTable& table) {
  std::vector<std::size_t> ys;
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    if (table.generators[i].stratum_L < table.tuple.period()) ys.push_back(i);
  }
  return ys;
}

}  // namespace

DifferentialStatus detect_vanishing_differential_serial(const GeneratorTable& table,
                                                        const std::optional<std::string>& override_provenance) {
  check_scan_coverage(table);
  const auto ys = fundamental_indices(table);
  std::vector<std::vector<std::pair<Generator, Generator>>> buckets(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) buckets[i] = witnesses_for(table, ys[i]);
  return finish(std::move(buckets), override_provenance);
}

DifferentialStatus detect_vanishing_differential(const GeneratorTable& table,
                                                 const std::optional<std::string>& override_provenance) {
  check_scan_coverage(table);
  const auto ys = fundamental_indices(table);
  std::vector<std::vector<std::pair<Generator, Generator>>> buckets(ys.size());
  const auto count = static_cast<std::int64_t>(ys.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    buckets[static_cast<std::size_t>(i)] = witnesses_for(table, ys[static_cast<std::size_t>(i)]);
  }
  return finish(std::move(buckets), override_provenance);
}

HomologyTable homology_table(const PeriodicGradedDims& m, const DifferentialStatus& status, DegreeWindow w) {
  if (status.status == VanishingStatus::Unknown) {
    std::ostringstream msg;
    msg << "differential not known to vanish; " << status.witnesses.size() << " witness pair(s):";
    for (const auto& [x, y] : status.witnesses) {
      msg << " [L=" << x.stratum_L << ",ind=" << x.morse_index << ",deg=" << x.product_degree << " -> L="
          << y.stratum_L << ",ind=" << y.morse_index << ",deg=" << y.product_degree << "]";
    }
    throw ValidationError(msg.str());
  }
  return HomologyTable{dims_in_window(m, w), status.status, status.provenance};
}

}  // namespace brieskorn
