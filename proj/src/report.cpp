#include "brieskorn/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "brieskorn/errors.hpp"
#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/grading.hpp"
#include "brieskorn/module_analysis.hpp"

namespace brieskorn {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  throw ValidationError("unknown output format '" + s + "' (json, csv, table)");
}

BettiTable ReportContext::betti_table() const {
  BettiTable table = BettiTable::bundled(data_dir);
  for (const auto& f : betti_files) table.load_user_file(f);
  return table;
}

namespace {

struct Report {
  explicit Report(std::string c) : command(std::move(c)) {}

  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit(const Report& r, const ReportContext& ctx) {
  switch (ctx.format) {
    case OutputFormat::Json: {
      json doc;
      doc["command"] = r.command;
      doc["provenance"] = {{"tool", kToolName}, {"version", kToolVersion}, {"args", ctx.args}, {"inputs", r.inputs}};
      doc["result"] = r.result;
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.columns[i]);
      out << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
      }
      return out.str();
    }
    case OutputFormat::Table: {
      std::vector<std::size_t> width(r.columns.size(), 0);
      for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      std::ostringstream out;
      out << "# " << r.command << " (" << kToolName << " " << kToolVersion << ")\n";
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        out << "\n";
      };
      line(r.columns);
      for (const auto& row : r.rows) line(row);
      return out.str();
    }
  }
  return {};
}

std::string list_text(const std::vector<std::int64_t>& v) { return "(" + join_key(v) + ")"; }

void add_kv(Report& r, const std::string& k, const std::string& v) { r.rows.push_back({k, v}); }

json generator_json(const Generator& g) {
  return {{"stratum_L", g.stratum_L},         {"morse_index", g.morse_index},
          {"product_degree", g.product_degree}, {"cz_degree", g.cz_degree},
          {"action", rational_text(g.action)},  {"multiplicity", g.multiplicity}};
}

json dims_json(const DegreeDims& dims) {
  json out = json::array();
  for (const auto& [d, v] : dims) out.push_back({{"degree", d}, {"dim", v}});
  return out;
}

}  // namespace

std::string report_info(const std::vector<std::int64_t>& exponents, const ReportContext& ctx) {
  const ExponentTuple t(exponents);
  Report r{"info"};
  r.inputs["exponents"] = exponents;
  r.result = {{"n", t.n()},
              {"dim_sigma", t.dim_sigma()},
              {"L_P", t.period()},
              {"maslov_index", t.maslov()},
              {"mu_P", t.mu_p()},
              {"shift_classification", to_string(t.shift_class())}};
  r.columns = {"key", "value"};
  add_kv(r, "exponents", list_text(exponents));
  add_kv(r, "n", std::to_string(t.n()));
  add_kv(r, "dim_sigma", std::to_string(t.dim_sigma()));
  add_kv(r, "L_P", std::to_string(t.period()));
  add_kv(r, "maslov_index", std::to_string(t.maslov()));
  add_kv(r, "mu_P", std::to_string(t.mu_p()));
  add_kv(r, "shift_classification", to_string(t.shift_class()));
  return emit(r, ctx);
}

std::string report_strata(const std::vector<std::int64_t>& exponents, std::int64_t max_L, const ReportContext& ctx) {
  const ExponentTuple t(exponents);
  const StrataList list = enumerate_strata(t, max_L, ctx.betti_table());
  Report r{"strata"};
  r.inputs = {{"exponents", exponents}, {"max_L", max_L}};
  r.columns = {"L", "active_set", "sub_tuple", "dim", "mu_rs", "betti", "betti_source"};
  json strata = json::array();
  for (const Stratum& s : list.strata) {
    std::vector<std::int64_t> active(s.active_set.begin(), s.active_set.end());
    strata.push_back({{"L", s.L},
                      {"active_set", active},
                      {"sub_tuple", s.sub_tuple},
                      {"dim", s.dim},
                      {"mu_rs", s.mu_rs},
                      {"betti", s.betti},
                      {"betti_source", to_string(s.betti_source)}});
    r.rows.push_back({std::to_string(s.L), list_text(active), list_text(s.sub_tuple), std::to_string(s.dim),
                      std::to_string(s.mu_rs), list_text(s.betti), to_string(s.betti_source)});
  }
  r.result = {{"L_P", t.period()}, {"strata", strata}};
  return emit(r, ctx);
}

std::string report_generators(const std::vector<std::int64_t>& exponents, DegreeWindow window,
                              const ReportContext& ctx) {
  const ExponentTuple t(exponents);
  const std::int64_t max_L = strata_needed_for_window(t, window);
  const GeneratorTable table = generator_table(enumerate_strata(t, max_L, ctx.betti_table()), window);
  Report r{"generators"};
  r.inputs = {{"exponents", exponents}, {"window", {window.lo, window.hi}}};
  r.columns = {"stratum_L", "morse_index", "product_degree", "cz_degree", "action", "multiplicity"};
  json gens = json::array();
  for (const Generator& g : table.generators) {
    gens.push_back(generator_json(g));
    r.rows.push_back({std::to_string(g.stratum_L), std::to_string(g.morse_index), std::to_string(g.product_degree),
                      std::to_string(g.cz_degree), rational_text(g.action), std::to_string(g.multiplicity)});
  }
  r.result = {{"max_L", table.max_L}, {"generators", gens}, {"s_class", generator_json(s_class(t))}};
  return emit(r, ctx);
}

std::string report_module(const std::vector<std::int64_t>& exponents, DegreeWindow window,
                          const std::optional<std::string>& external_vanishing, const ReportContext& ctx) {
  const ExponentTuple t(exponents);
  const BettiTable betti = ctx.betti_table();
  const PeriodicGradedDims m = period_module(enumerate_strata(t, std::max<std::int64_t>(t.period() - 1, 0), betti));
  const GeneratorTable full = generator_table(enumerate_strata(t, scan_max_L(t, m), betti), std::nullopt);
  const DifferentialStatus status = detect_vanishing_differential(full, external_vanishing);

  Report r{"module"};
  r.inputs = {{"exponents", exponents}, {"window", {window.lo, window.hi}}};
  if (external_vanishing) r.inputs["external_vanishing"] = *external_vanishing;

  json witnesses = json::array();
  for (const auto& [x, y] : status.witnesses) witnesses.push_back({{"x", generator_json(x)}, {"y", generator_json(y)}});
  r.result = {{"mu_P", m.mu_p},
              {"rank", m.rank()},
              {"mode", to_string(m.mode())},
              {"period_degrees", m.period_degrees},
              {"differential", {{"status", to_string(status.status)},
                                {"provenance", status.provenance},
                                {"witnesses", witnesses}}}};

  if (m.mode() == ModuleMode::LaurentSeriesVectorSpace) {
    r.columns = {"period_degree"};
    for (std::int64_t e : m.period_degrees) r.rows.push_back({std::to_string(e)});
    return emit(r, ctx);
  }

  const DegreeDims chain = dims_in_window(m, window);
  const DegreeDims positive = positive_part(m, window);
  std::optional<HomologyTable> homology;
  if (status.status != VanishingStatus::Unknown) homology = homology_table(m, status, window);

  r.result["chain_dims"] = dims_json(chain);
  r.result["positive_part"] = dims_json(positive);
  r.result["homology"] = homology ? json{{"dims", dims_json(homology->dims)},
                                         {"status", to_string(homology->status)},
                                         {"provenance", homology->provenance}}
                                  : json(nullptr);
  r.columns = {"degree", "chain_dim", "positive_part", "homology_dim"};
  for (const auto& [d, v] : chain) {
    r.rows.push_back({std::to_string(d), std::to_string(v), std::to_string(positive.at(d)),
                      homology ? std::to_string(homology->dims.at(d)) : std::string("?")});
  }
  return emit(r, ctx);
}

std::string report_check_index(const std::vector<std::int64_t>& exponents, bool filling_assumed,
                               const ReportContext& ctx) {
  const ExponentTuple t(exponents);
  const IndexReport rep = check_index_positivity(enumerate_strata(t, t.period(), ctx.betti_table()), filling_assumed);
  Report r{"check-index"};
  r.inputs = {{"exponents", exponents}, {"filling_assumed", filling_assumed}};
  r.result = {{"classification", to_string(rep.classification)},
              {"min_cz_witness", {{"L", rep.witness_L}, {"cz", rep.witness_cz}}},
              {"theorem_case", to_string(rep.theorem_case)},
              {"convention", rep.convention}};
  r.columns = {"key", "value"};
  add_kv(r, "classification", to_string(rep.classification));
  add_kv(r, "witness_L", std::to_string(rep.witness_L));
  add_kv(r, "witness_cz", std::to_string(rep.witness_cz));
  add_kv(r, "theorem_case", to_string(rep.theorem_case));
  add_kv(r, "convention", rep.convention);
  return emit(r, ctx);
}

std::string report_algebra(const GradedPresentation& p, const AlgebraRequest& req, const ReportContext& ctx) {
  const HilbertResult h = stabilized_hilbert(p, req.window, req.start_cap, req.max_cap);
  if (!h.converged) {
    throw UnconvergedError("Hilbert function of '" + p.name() + "' did not stabilize by word cap " +
                               std::to_string(req.max_cap),
                           h.unconverged_degrees);
  }
  Report r{"algebra"};
  r.inputs = {{"presentation", json::parse(p.to_json())},
              {"window", {req.window.lo, req.window.hi}},
              {"start_cap", req.start_cap},
              {"max_cap", req.max_cap}};
  r.result = {{"converged", h.converged}, {"cap", h.cap}, {"dims", dims_json(h.dims)}};
  r.columns = {"degree", "dim"};

  std::optional<DegreeDims> mono;
  if (req.monomial_check) {
    const HilbertResult mq = monomial_quotient_dims(p, req.window, req.max_cap);
    mono = mq.dims;
    r.result["monomial_quotient"] = {{"converged", mq.converged}, {"cap", mq.cap}, {"dims", dims_json(mq.dims)},
                                     {"agrees", mq.dims == h.dims}};
    r.columns.push_back("monomial_dim");
  }

  std::optional<DegreeDims> target;
  if (req.compare_tuple) {
    const ExponentTuple t(*req.compare_tuple);
    const PeriodicGradedDims m =
        period_module(enumerate_strata(t, std::max<std::int64_t>(t.period() - 1, 0), ctx.betti_table()));
    target = req.compare_positive_part ? positive_part(m, req.window) : dims_in_window(m, req.window);
    r.inputs["compare_tuple"] = *req.compare_tuple;
    r.inputs["compare_positive_part"] = req.compare_positive_part;
    json mismatches = json::array();
    for (const auto& [d, v] : h.dims) {
      if (target->at(d) != v) mismatches.push_back({{"degree", d}, {"algebra", v}, {"module", target->at(d)}});
    }
    r.result["comparison"] = {{"mismatches", mismatches}, {"consistent", mismatches.empty()}};
    r.columns.push_back("module_dim");
  }

  for (const auto& [d, v] : h.dims) {
    std::vector<std::string> row{std::to_string(d), std::to_string(v)};
    if (mono) row.push_back(std::to_string(mono->at(d)));
    if (target) row.push_back(std::to_string(target->at(d)));
    r.rows.push_back(std::move(row));
  }
  return emit(r, ctx);
}

std::string report_virtual_dim(const std::vector<std::int64_t>& plus, const std::vector<std::int64_t>& minus,
                               const std::vector<std::int64_t>& reeb, std::int64_t n, const ReportContext& ctx) {
  const std::int64_t v = virtual_dimension(plus, minus, reeb, n);
  Report r{"virtual-dim"};
  r.inputs = {{"plus", plus}, {"minus", minus}, {"reeb", reeb}, {"n", n}};
  r.result = {{"virtual_dimension", v}};
  r.columns = {"key", "value"};
  add_kv(r, "virtual_dimension", std::to_string(v));
  return emit(r, ctx);
}

std::string betti_stub(const std::vector<std::int64_t>& sub_tuple) {
  std::vector<std::int64_t> placeholder(2 * sub_tuple.size() - 2, 0);
  placeholder.front() = 1;
  placeholder.back() = 1;
  json stub;
  stub[join_key(sub_tuple)] = placeholder;
  return stub.dump();
}

}  // namespace brieskorn
