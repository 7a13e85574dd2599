#include "brieskorn/presentations.hpp"

#include <string>

#include "brieskorn/errors.hpp"

namespace brieskorn::presentations {

namespace {

using Mono = std::vector<std::string>;
using Rel = std::vector<Mono>;

Mono power(const std::string& name, std::int64_t e) { return Mono(static_cast<std::size_t>(e), name); }

Mono concat(Mono a, const Mono& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string s_name(std::int64_t i) { return "s" + std::to_string(i); }

}  // namespace

GradedPresentation loop_homology_sphere(std::int64_t n) {
  if (n < 1) throw ValidationError("sphere dimension must be positive");
  return GradedPresentation({{"a", -n}, {"u", n - 1}}, {{{"a", "a"}}}, "loop_homology_S" + std::to_string(n));
}

GradedPresentation cotangent_sphere_ring(std::int64_t n) {
  if (n < 1) throw ValidationError("sphere dimension must be positive");
  return GradedPresentation({{"a", -n}, {"u", n - 1}, {"u_inv", -(n - 1)}},
                            {{{"a", "a"}}, {{"u", "u_inv"}, {}}}, "cotangent_sphere_ring_n" + std::to_string(n));
}

GradedPresentation ak_milnor_fibre_even(std::int64_t k) {
  if (k < 2 || k % 2 != 0) throw ValidationError("even A_k presentation needs even k >= 2");
  std::vector<AlgebraGenerator> gens;
  for (std::int64_t i = 1; i <= k; ++i) gens.push_back({s_name(i), -2});
  gens.push_back({"t1", -1});
  gens.push_back({"t0", 0});
  gens.push_back({"t_m2", 2});
  std::vector<Rel> rels;
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = i; j <= k; ++j) rels.push_back({{s_name(i), s_name(j)}});
    for (const char* t : {"t1", "t0", "t_m2"}) rels.push_back({{s_name(i), t}});
  }
  rels.push_back({power("t1", 2)});
  rels.push_back({power("t0", k)});
  return GradedPresentation(std::move(gens), rels, "ak_even_k" + std::to_string(k));
}

GradedPresentation ak_milnor_fibre_odd(std::int64_t k) {
  if (k < 3 || k % 2 == 0) throw ValidationError("odd A_k presentation needs odd k >= 3");
  const bool unit_constants = (k + 1) % 4 == 0;  // α = β = 1
  constexpr std::int64_t n = 2;                  // Σ(k+1, 2, 2) has n = 2
  std::vector<AlgebraGenerator> gens;
  for (std::int64_t i = 1; i <= k; ++i) gens.push_back({s_name(i), -2});
  gens.push_back({"t1", -1});
  gens.push_back({"t0", 0});
  gens.push_back({"u_m1", 1});
  gens.push_back({"t_m2", 2});
  std::vector<Rel> rels;
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = i; j <= k; ++j) rels.push_back({{s_name(i), s_name(j)}});
    rels.push_back({{s_name(i), "t1"}});
    rels.push_back({{s_name(i), "t0"}});
    rels.push_back({{s_name(i), "u_m1"}, concat({"t1"}, power("t0", k - 1))});
    rels.push_back({{s_name(i), "t_m2"}, power("t0", k)});
  }
  rels.push_back({power("t1", 2)});
  rels.push_back({{"t0", "u_m1"}, {"t1", "t_m2"}});
  if (unit_constants) {
    rels.push_back({{"t1", "u_m1"}, power("t0", k)});
    rels.push_back({{"u_m1", "u_m1"}, power("t0", n - 1)});
  } else {
    rels.push_back({{"t1", "u_m1"}});
    rels.push_back({{"u_m1", "u_m1"}});
  }
  return GradedPresentation(std::move(gens), rels, "ak_odd_k" + std::to_string(k));
}

GradedPresentation free_laurent_module(const std::vector<std::int64_t>& degrees, std::int64_t mu) {
  if (mu == 0) throw ValidationError("free Laurent module needs a nonzero shift");
  std::vector<AlgebraGenerator> gens{{"s", mu}, {"s_inv", -mu}};
  for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({"e" + std::to_string(i), degrees[i]});
  std::vector<Rel> rels{{{"s", "s_inv"}, {}}};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = i; j < degrees.size(); ++j) {
      rels.push_back({{"e" + std::to_string(i), "e" + std::to_string(j)}});
    }
  }
  return GradedPresentation(std::move(gens), rels, "free_laurent_module");
}

}  // namespace brieskorn::presentations
