#include "brieskorn/grading.hpp"

#include <algorithm>
#include <numeric>

#include "brieskorn/errors.hpp"

namespace brieskorn {

DegreeDims zero_dims(DegreeWindow w) {
  DegreeDims out;
  for (std::int64_t d = w.lo; d <= w.hi; ++d) out[d] = 0;
  return out;
}

namespace {

// Degree range [base, base + dim] of the stratum at L ≥ 1, without Betti
// data; nullopt for an empty stratum. b_0 = b_dim ≥ 1 so both ends occur.
struct DegreeSpan {
  std::int64_t lo;
  std::int64_t hi;
};

std::optional<DegreeSpan> degree_span(const ExponentTuple& t, std::int64_t L) {
  const auto active = static_cast<std::int64_t>(active_set(t, L).size());
  if (active < 2) return std::nullopt;
  const std::int64_t dim = 2 * active - 3;
  const std::int64_t base = robbin_salamon_index(t, L) - (dim - 1) / 2 - t.n();
  return DegreeSpan{base, base + dim};
}

}  // namespace

std::int64_t stratum_base_degree(const ExponentTuple& t, const Stratum& s) {
  if (s.is_constants()) return -(2 * t.n() - 1);
  return s.mu_rs - (s.dim - 1) / 2 - t.n();
}

std::int64_t product_degree(const ExponentTuple& t, const Stratum& s, std::int64_t morse_index) {
  return stratum_base_degree(t, s) + morse_index;
}

std::vector<Generator> stratum_generators(const ExponentTuple& t, const Stratum& s) {
  std::vector<Generator> out;
  const Rational action(s.L, t.period());
  for (std::size_t ind = 0; ind < s.betti.size(); ++ind) {
    if (s.betti[ind] == 0) continue;
    Generator g;
    g.stratum_L = s.L;
    g.morse_index = static_cast<std::int64_t>(ind);
    g.product_degree = product_degree(t, s, g.morse_index);
    g.cz_degree = g.product_degree + t.n();
    g.action = action;
    g.multiplicity = s.betti[ind];
    out.push_back(g);
  }
  return out;
}

std::int64_t strata_needed_for_window(const ExponentTuple& t, DegreeWindow w) {
  const std::int64_t mu = t.mu_p();
  if (mu == 0) {
    throw CoverageError("needs-finite-period-window: zero index shift, every period repeats the same degrees");
  }
  const std::int64_t lp = t.period();
  std::int64_t needed = 0;
  for (std::int64_t r = 1; r <= lp; ++r) {
    auto span = degree_span(t, r);
    if (!span) continue;
    // Stratum r + q·L_P has degrees shifted by q·μ_P.
    std::int64_t q_max;
    if (mu > 0) {
      if (span->lo > w.hi) continue;
      q_max = (w.hi - span->lo) / mu;
    } else {
      if (span->hi < w.lo) continue;
      q_max = (span->hi - w.lo) / (-mu);
    }
    needed = std::max(needed, r + q_max * lp);
  }
  return needed;
}

GeneratorTable generator_table(const StrataList& strata, std::optional<DegreeWindow> window) {
  const ExponentTuple& t = strata.tuple;
  if (window) {
    if (window->lo > window->hi) throw ValidationError("degree window lo > hi");
    const std::int64_t needed = strata_needed_for_window(t, *window);
    if (strata.max_L < needed) {
      throw CoverageError("strata up to L = " + std::to_string(strata.max_L) + " do not cover degrees [" +
                          std::to_string(window->lo) + ", " + std::to_string(window->hi) +
                          "]; need L up to " + std::to_string(needed));
    }
  }
  GeneratorTable table{t, strata.max_L, window, {}};
  for (const Stratum& s : strata.strata) {
    for (Generator& g : stratum_generators(t, s)) {
      if (!window || window->contains(g.product_degree)) table.generators.push_back(g);
    }
  }
  std::stable_sort(table.generators.begin(), table.generators.end(), [](const Generator& a, const Generator& b) {
    if (a.action != b.action) return a.action < b.action;
    if (a.product_degree != b.product_degree) return a.product_degree < b.product_degree;
    return a.morse_index < b.morse_index;
  });
  return table;
}

Generator s_class(const ExponentTuple& t) {
  Generator g;
  g.stratum_L = t.period();
  g.morse_index = t.dim_sigma();
  // μ_RS(L_P) − (2n−2)/2 − n + (2n−1) = 2·I(g).
  g.product_degree = t.mu_p();
  g.cz_degree = g.product_degree + t.n();
  g.action = Rational(1);
  g.multiplicity = 1;
  return g;
}

std::string to_string(IndexClass c) {
  switch (c) {
    case IndexClass::ProductIndexPositive:
      return "ProductIndexPositive";
    case IndexClass::IndexPositiveStrong:
      return "IndexPositiveStrong";
    case IndexClass::IndexPositiveWithFilling:
      return "IndexPositiveWithFilling";
    case IndexClass::NotIndexPositive:
      return "NotIndexPositive";
    case IndexClass::FailsForLargeL:
      return "FailsForLargeL";
  }
  return "?";
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::SummaryTheoremLaurent:
      return "SummaryTheoremLaurent";
    case TheoremCase::SummaryTheoremLaurentSeries:
      return "SummaryTheoremLaurentSeries";
    case TheoremCase::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

std::int64_t stratum_min_cz(const Stratum& s) { return s.mu_rs - (s.dim - 1) / 2; }

IndexReport check_index_positivity(const StrataList& strata, bool filling_assumed) {
  const ExponentTuple& t = strata.tuple;
  const std::int64_t lp = t.period();
  if (strata.max_L < lp) {
    throw CoverageError("index check needs strata through L = " + std::to_string(lp) + ", got " +
                        std::to_string(strata.max_L));
  }
  IndexReport report;
  report.filling_assumed = filling_assumed;
  bool found = false;
  for (const Stratum& s : strata.strata) {
    if (s.L < 1 || s.L > lp) continue;
    const std::int64_t cz = stratum_min_cz(s);
    if (!found || cz < report.witness_cz) {
      report.witness_L = s.L;
      report.witness_cz = cz;
      found = true;
    }
  }
  // The principal stratum L = L_P is always nonempty.
  const std::int64_t v = report.witness_cz;
  const std::int64_t n = t.n();

  if (t.mu_p() < 0) {
    report.classification = IndexClass::FailsForLargeL;
  } else if (v > 3) {
    report.classification = IndexClass::ProductIndexPositive;
  } else if (v > 4 - n) {
    report.classification = IndexClass::IndexPositiveStrong;
  } else if (filling_assumed && v > 3 - n) {
    report.classification = IndexClass::IndexPositiveWithFilling;
  } else {
    report.classification = IndexClass::NotIndexPositive;
  }

  const bool product_positive = report.classification == IndexClass::ProductIndexPositive;
  const bool weak_with_filling = t.mu_p() >= 0 && filling_assumed && v > 3 - n;
  if (t.maslov() != 0 && t.mu_p() > 0 && (product_positive || weak_with_filling)) {
    report.theorem_case = TheoremCase::SummaryTheoremLaurent;
  } else if (t.maslov() == 0 && product_positive) {
    report.theorem_case = TheoremCase::SummaryTheoremLaurentSeries;
  } else {
    report.theorem_case = TheoremCase::NotApplicable;
  }
  return report;
}

std::int64_t virtual_dimension(std::span<const std::int64_t> gamma_plus,
                               std::span<const std::int64_t> gamma_minus,
                               std::span<const std::int64_t> reeb_cz, std::int64_t n) {
  if (n < 1) throw ValidationError("virtual dimension needs n >= 1");
  const std::int64_t plus = std::accumulate(gamma_plus.begin(), gamma_plus.end(), std::int64_t{0});
  const std::int64_t minus = std::accumulate(gamma_minus.begin(), gamma_minus.end(), std::int64_t{0});
  std::int64_t discs = 0;
  for (std::int64_t c : reeb_cz) discs += c + n - 3;
  const auto punctures = static_cast<std::int64_t>(gamma_plus.size() + gamma_minus.size());
  return plus - minus + n * (2 - punctures) - discs;
}

bool breaking_excluded(std::int64_t mu1, std::int64_t mu2, std::int64_t min_reeb_cz) {
  const auto abs64 = [](std::int64_t x) { return x < 0 ? -x : x; };
  return min_reeb_cz > std::max(3 - abs64(mu1), 3 - abs64(mu2));
}

}  // namespace brieskorn
