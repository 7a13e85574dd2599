// brieskorn: invariants of Brieskorn manifolds from the command line.
//
//   brieskorn info 6 2 2 2
//   brieskorn module 4 2 2 2 --window -6 6 --format table
//   brieskorn algebra --example ak-even --param 4 --window -8 8 --monomial-check
//   brieskorn verify all
//
// Exit codes: 0 ok, 2 invalid input, 3 missing Betti data, 4 unknown
// example, 5 unconverged algebra computation. Verification failures exit 1.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brieskorn/errors.hpp"
#include "brieskorn/presentations.hpp"
#include "brieskorn/report.hpp"
#include "brieskorn/verify.hpp"

using namespace brieskorn;

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

DegreeWindow to_window(const std::vector<std::int64_t>& v) {
  if (v.size() != 2 || v[0] > v[1]) throw ValidationError("--window needs LO HI with LO <= HI");
  return {v[0], v[1]};
}

GradedPresentation named_presentation(const std::string& name, std::int64_t param) {
  if (name == "loop-homology") return presentations::loop_homology_sphere(param);
  if (name == "cotangent-ring") return presentations::cotangent_sphere_ring(param);
  if (name == "ak-even") return presentations::ak_milnor_fibre_even(param);
  if (name == "ak-odd") return presentations::ak_milnor_fibre_odd(param);
  throw ValidationError("unknown presentation '" + name + "' (loop-homology, cotangent-ring, ak-even, ak-odd)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb orbit strata, gradings and symplectic homology tables of Brieskorn manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::vector<std::string> betti_files;
  std::string data_dir = default_data_dir().string();
  app.add_option("--format", format, "json, csv or table")->capture_default_str();
  app.add_option("--betti", betti_files, "user Betti table (JSON), repeatable")->check(CLI::ExistingFile);
  app.add_option("--data-dir", data_dir, "bundled data directory")->capture_default_str();

  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> window;
  std::int64_t max_L = 0;

  auto* info = app.add_subcommand("info", "n, dim, L_P, I(g), mu_P and shift class");
  info->add_option("exponents", exponents)->required();

  auto* strata = app.add_subcommand("strata", "Morse-Bott strata for 0 <= L <= max-L");
  strata->add_option("exponents", exponents)->required();
  strata->add_option("--max-L", max_L, "largest L (default L_P)");

  auto* generators = app.add_subcommand("generators", "chain generators with degree and action");
  generators->add_option("exponents", exponents)->required();
  generators->add_option("--window", window, "degree window LO HI")->expected(2)->required();

  std::optional<std::string> external_vanishing;
  auto* module = app.add_subcommand("module", "period module, differential status and homology table");
  module->add_option("exponents", exponents)->required();
  module->add_option("--window", window, "degree window LO HI")->expected(2)->required();
  module->add_option("--external-vanishing", external_vanishing,
                     "accept vanishing differentials established elsewhere; the text is recorded as provenance");

  bool filling = false;
  auto* check_index = app.add_subcommand("check-index", "index-positivity classification");
  check_index->add_option("exponents", exponents)->required();
  check_index->add_flag("--filling", filling, "assume a filling with vanishing first Chern class");

  std::string presentation_file, example;
  std::int64_t param = 0, cap = 1, max_cap = 24;
  std::vector<std::int64_t> compare;
  bool positive = false, monomial = false;
  auto* algebra = app.add_subcommand("algebra", "Hilbert function of a graded GF(2) algebra");
  auto* src_file = algebra->add_option("--presentation", presentation_file, "presentation JSON")
                       ->check(CLI::ExistingFile);
  auto* src_example =
      algebra->add_option("--example", example, "loop-homology, cotangent-ring, ak-even or ak-odd");
  algebra->add_option("--param", param, "n or k for --example");
  src_file->excludes(src_example);
  algebra->add_option("--window", window, "degree window LO HI")->expected(2)->required();
  algebra->add_option("--cap", cap, "starting word-length cap")->capture_default_str();
  algebra->add_option("--max-cap", max_cap, "largest word-length cap")->capture_default_str();
  algebra->add_option("--compare", compare, "compare with the module of this tuple");
  algebra->add_flag("--positive-part", positive, "compare with the positive part instead");
  algebra->add_flag("--monomial-check", monomial, "also count standard monomials");

  std::vector<std::int64_t> plus, minus, reeb;
  std::int64_t n = 0;
  auto* virtual_dim = app.add_subcommand("virtual-dim", "virtual dimension of a holomorphic curve moduli space");
  virtual_dim->add_option("--plus", plus, "indices of positive punctures");
  virtual_dim->add_option("--minus", minus, "indices of negative punctures");
  virtual_dim->add_option("--reeb", reeb, "indices of the Reeb orbit components");
  virtual_dim->add_option("--n", n, "complex dimension n")->required();

  std::string verify_name;
  auto* verify = app.add_subcommand("verify", "replay the bundled examples");
  verify->add_option("name", verify_name, "example name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::Validation);
  }

  ReportContext ctx;
  ctx.args.assign(argv + 1, argv + argc);
  ctx.data_dir = data_dir;
  for (const auto& f : betti_files) ctx.betti_files.emplace_back(f);

  try {
    ctx.format = parse_format(format);
    if (*info) {
      std::cout << report_info(exponents, ctx);
    } else if (*strata) {
      std::cout << report_strata(exponents, max_L > 0 ? max_L : ExponentTuple(exponents).period(), ctx);
    } else if (*generators) {
      std::cout << report_generators(exponents, to_window(window), ctx);
    } else if (*module) {
      std::cout << report_module(exponents, to_window(window), external_vanishing, ctx);
    } else if (*check_index) {
      std::cout << report_check_index(exponents, filling, ctx);
    } else if (*algebra) {
      if (presentation_file.empty() && example.empty()) throw ValidationError("algebra needs --presentation or --example");
      const GradedPresentation p = presentation_file.empty() ? named_presentation(example, param)
                                                             : GradedPresentation::from_file(presentation_file);
      AlgebraRequest req;
      req.window = to_window(window);
      req.start_cap = cap;
      req.max_cap = max_cap;
      if (!compare.empty()) req.compare_tuple = compare;
      req.compare_positive_part = positive;
      req.monomial_check = monomial;
      std::cout << report_algebra(p, req, ctx);
    } else if (*virtual_dim) {
      std::cout << report_virtual_dim(plus, minus, reeb, n, ctx);
    } else if (*verify) {
      const auto results = run_verification(verify_name, ctx.data_dir);
      std::cout << verification_json(results);
      for (const auto& r : results) {
        if (!r.passed) return 1;
      }
    }
  } catch (const MissingBettiError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "add an entry for sub-tuple (" << join_key(e.sub_tuple()) << ") to a file passed with --betti:\n"
              << betti_stub(e.sub_tuple()) << "\n";
    return code(ExitCode::MissingBetti);
  } catch (const UnknownExampleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::UnknownExample);
  } catch (const UnconvergedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.degrees().empty()) std::cerr << "unstable degrees: " << join_key(e.degrees()) << "\n";
    return code(ExitCode::Unconverged);
  } catch (const std::exception& e) {
    // ValidationError, CoverageError, ModeError and JSON parse failures.
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::Validation);
  }
  return 0;
}
