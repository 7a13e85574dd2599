#include "brieskorn/graded_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "brieskorn/errors.hpp"
#include "brieskorn/gf2.hpp"

namespace brieskorn {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t e : m) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct RowHash {
  std::size_t operator()(const std::vector<std::uint32_t>& r) const noexcept {
    std::size_t h = r.size();
    for (std::uint32_t c : r) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

GradedPresentation::GradedPresentation(std::vector<AlgebraGenerator> generators,
                                       const std::vector<std::vector<std::vector<std::string>>>& relations,
                                       std::string name)
    : name_(std::move(name)), generators_(std::move(generators)) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name.empty()) throw ValidationError("generator " + std::to_string(i) + " has no name");
    if (!index.emplace(generators_[i].name, i).second) {
      throw ValidationError("duplicate generator name '" + generators_[i].name + "'");
    }
  }
  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    std::map<Monomial, int> parity;
    for (const auto& names : relations[ri]) {
      Monomial m(generators_.size(), 0);
      for (const auto& nm : names) {
        auto it = index.find(nm);
        if (it == index.end()) {
          throw ValidationError("relation " + std::to_string(ri) + " uses unknown generator '" + nm + "'");
        }
        ++m[it->second];
      }
      parity[m] ^= 1;
    }
    Relation rel;
    for (auto& [m, odd] : parity) {
      if (odd) rel.terms.push_back(m);
    }
    for (const Monomial& m : rel.terms) {
      if (degree(m) != degree(rel.terms.front())) {
        throw ValidationError("relation " + std::to_string(ri) + " (" + render(rel) +
                              " = 0) is not homogeneous: degrees " + std::to_string(degree(rel.terms.front())) +
                              " and " + std::to_string(degree(m)));
      }
    }
    relations_.push_back(std::move(rel));
  }
}

GradedPresentation GradedPresentation::from_json(std::string_view text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  try {
    std::vector<AlgebraGenerator> gens;
    for (const auto& g : doc.at("generators")) {
      gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<std::int64_t>()});
    }
    std::vector<std::vector<std::vector<std::string>>> rels;
    for (const auto& r : doc.at("relations")) {
      rels.push_back(r.get<std::vector<std::vector<std::string>>>());
    }
    std::string name = doc.value("name", std::string{});
    return GradedPresentation(std::move(gens), rels, std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(origin + ": malformed presentation: " + e.what());
  }
}

GradedPresentation GradedPresentation::from_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open presentation file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), file.string());
}

std::string GradedPresentation::to_json() const {
  nlohmann::ordered_json doc;
  doc["name"] = name_;
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : generators_) doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : relations_) {
    auto rel = nlohmann::ordered_json::array();
    for (const auto& m : r.terms) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < m.size(); ++i) names.insert(names.end(), m[i], generators_[i].name);
      rel.push_back(names);
    }
    doc["relations"].push_back(rel);
  }
  return doc.dump(2);
}

std::int64_t GradedPresentation::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(m[i]) * generators_[i].degree;
  return d;
}

std::int64_t GradedPresentation::length(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

std::string GradedPresentation::render(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string GradedPresentation::render(const Relation& r) const {
  if (r.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    if (i) out += " + ";
    out += render(r.terms[i]);
  }
  return out;
}

bool GradedPresentation::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const Relation& r) { return r.terms.size() <= 1; });
}

namespace {

using DegreeBuckets = std::unordered_map<std::int64_t, std::vector<Monomial>>;

// Every monomial of length ≤ cap, bucketed by degree.
DegreeBuckets enumerate_monomials(const GradedPresentation& p, std::int64_t cap) {
  DegreeBuckets out;
  const std::size_t g = p.generators().size();
  Monomial m(g, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining, std::int64_t deg) -> void {
    if (i == g) {
      out[deg].push_back(m);
      return;
    }
    const std::int64_t gd = p.generators()[i].degree;
    for (std::int64_t e = 0; e <= remaining; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e, deg + e * gd);
    }
    m[i] = 0;
  };
  rec(rec, 0, cap, 0);
  return out;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

struct RelationInfo {
  std::int64_t degree;
  std::int64_t max_length;
};

std::int64_t dimension_in_degree(const GradedPresentation& p, const DegreeBuckets& buckets,
                                 const std::vector<RelationInfo>& info, std::int64_t d, std::int64_t cap,
                                 Execution exec) {
  auto cols_it = buckets.find(d);
  if (cols_it == buckets.end()) return 0;
  const auto& cols = cols_it->second;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_index;
  col_index.reserve(cols.size());
  for (std::uint32_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

  std::vector<char> killed(cols.size(), 0);
  std::size_t killed_count = 0;
  std::vector<std::vector<std::uint32_t>> pending;

  const auto& rels = p.relations();
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    if (rels[ri].terms.empty()) continue;
    auto mult_it = buckets.find(d - info[ri].degree);
    if (mult_it == buckets.end()) continue;
    for (const Monomial& m : mult_it->second) {
      if (GradedPresentation::length(m) + info[ri].max_length > cap) continue;
      std::vector<std::uint32_t> row;
      row.reserve(rels[ri].terms.size());
      for (const Monomial& t : rels[ri].terms) row.push_back(col_index.at(multiply(t, m)));
      if (row.size() == 1) {
        if (!killed[row[0]]) {
          killed[row[0]] = 1;
          ++killed_count;
        }
      } else {
        std::sort(row.begin(), row.end());
        pending.push_back(std::move(row));
      }
    }
  }

  // Reduce by unit rows until no new unit row appears.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(pending.size());
    for (auto& row : pending) {
      std::erase_if(row, [&](std::uint32_t c) { return killed[c] != 0; });
      if (row.empty()) continue;
      if (row.size() == 1) {
        killed[row[0]] = 1;
        ++killed_count;
        changed = true;
        continue;
      }
      next.push_back(std::move(row));
    }
    pending = std::move(next);
  }

  std::unordered_set<std::vector<std::uint32_t>, RowHash> unique_rows(pending.begin(), pending.end());
  std::vector<std::vector<std::uint32_t>> rows(unique_rows.begin(), unique_rows.end());
  std::sort(rows.begin(), rows.end());

  std::size_t dense_rank = 0;
  if (!rows.empty()) {
    std::vector<std::uint32_t> used;
    for (const auto& r : rows) used.insert(used.end(), r.begin(), r.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::unordered_map<std::uint32_t, std::size_t> compact;
    for (std::size_t i = 0; i < used.size(); ++i) compact.emplace(used[i], i);
    gf2::BitMatrix mat(rows.size(), used.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::uint32_t c : rows[r]) mat.flip(r, compact.at(c));
    }
    dense_rank = exec == Execution::Serial ? gf2::rank_serial(std::move(mat)) : gf2::rank_omp(std::move(mat));
  }
  return static_cast<std::int64_t>(cols.size() - killed_count - dense_rank);
}

void check_cap(std::int64_t cap) {
  if (cap < 1) throw ValidationError("word cap must be at least 1, got " + std::to_string(cap));
}

}  // namespace

DegreeDims hilbert_dims_at_cap(const GradedPresentation& p, DegreeWindow w, std::int64_t cap, Execution exec) {
  check_cap(cap);
  if (w.lo > w.hi) throw ValidationError("degree window lo > hi");
  const DegreeBuckets buckets = enumerate_monomials(p, cap);
  std::vector<RelationInfo> info;
  for (const Relation& r : p.relations()) {
    RelationInfo ri{0, 0};
    if (!r.terms.empty()) {
      ri.degree = p.degree(r.terms.front());
      for (const Monomial& t : r.terms) ri.max_length = std::max(ri.max_length, GradedPresentation::length(t));
    }
    info.push_back(ri);
  }

  const std::int64_t count = w.hi - w.lo + 1;
  std::vector<std::int64_t> dims(static_cast<std::size_t>(count), 0);
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) {
      dims[static_cast<std::size_t>(i)] = dimension_in_degree(p, buckets, info, w.lo + i, cap, exec);
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      dims[static_cast<std::size_t>(i)] = dimension_in_degree(p, buckets, info, w.lo + i, cap, exec);
    }
  }
  DegreeDims out;
  for (std::int64_t i = 0; i < count; ++i) out[w.lo + i] = dims[static_cast<std::size_t>(i)];
  return out;
}

namespace {

HilbertResult pair_result(DegreeDims at_cap, DegreeDims at_next, std::int64_t cap) {
  HilbertResult res;
  res.cap = cap;
  for (const auto& [d, v] : at_cap) {
    if (at_next.at(d) != v) res.unconverged_degrees.push_back(d);
  }
  res.converged = res.unconverged_degrees.empty();
  res.dims = std::move(at_cap);
  res.dims_next = std::move(at_next);
  return res;
}

}  // namespace

HilbertResult hilbert_function(const GradedPresentation& p, DegreeWindow w, std::int64_t word_cap, Execution exec) {
  return pair_result(hilbert_dims_at_cap(p, w, word_cap, exec), hilbert_dims_at_cap(p, w, word_cap + 1, exec),
                     word_cap);
}

HilbertResult stabilized_hilbert(const GradedPresentation& p, DegreeWindow w, std::int64_t start_cap,
                                 std::int64_t max_cap, Execution exec) {
  check_cap(start_cap);
  if (max_cap < start_cap) throw ValidationError("max cap below start cap");
  DegreeDims current = hilbert_dims_at_cap(p, w, start_cap, exec);
  for (std::int64_t cap = start_cap;; ++cap) {
    DegreeDims next = hilbert_dims_at_cap(p, w, cap + 1, exec);
    HilbertResult res = pair_result(current, next, cap);
    if (res.converged || cap >= max_cap) return res;
    current = std::move(next);
  }
}

DegreeDims monomial_quotient_dims_at_cap(const GradedPresentation& p, DegreeWindow w, std::int64_t cap) {
  check_cap(cap);
  if (w.lo > w.hi) throw ValidationError("degree window lo > hi");
  std::vector<Monomial> forbidden;
  for (std::size_t ri = 0; ri < p.relations().size(); ++ri) {
    const Relation& r = p.relations()[ri];
    if (r.terms.size() >= 2) {
      throw ValidationError("relation " + std::to_string(ri) + " (" + p.render(r) +
                            " = 0) has more than one term; monomial quotient needs monomial relations");
    }
    if (r.terms.size() == 1) forbidden.push_back(r.terms.front());
  }

  DegreeDims out = zero_dims(w);
  const std::size_t g = p.generators().size();
  Monomial m(g, 0);
  auto divides = [](const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  // Depth-first over exponent vectors; once a prefix is divisible by a
  // forbidden monomial supported on the assigned generators, every
  // extension is too.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining, std::int64_t deg) -> void {
    for (const Monomial& f : forbidden) {
      if (divides(f, m)) return;
    }
    if (i == g) {
      if (w.contains(deg)) ++out[deg];
      return;
    }
    const std::int64_t gd = p.generators()[i].degree;
    for (std::int64_t e = 0; e <= remaining; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e, deg + e * gd);
    }
    m[i] = 0;
  };
  rec(rec, 0, cap, 0);
  return out;
}

HilbertResult monomial_quotient_dims(const GradedPresentation& p, DegreeWindow w, std::int64_t max_cap) {
  DegreeDims current = monomial_quotient_dims_at_cap(p, w, 1);
  for (std::int64_t cap = 1;; ++cap) {
    DegreeDims next = monomial_quotient_dims_at_cap(p, w, cap + 1);
    HilbertResult res = pair_result(current, next, cap);
    if (res.converged || cap >= max_cap) return res;
    current = std::move(next);
  }
}

ComparisonReport compare_to_module(const GradedPresentation& p, const DegreeDims& target, DegreeWindow w,
                                   std::int64_t max_cap, Execution exec) {
  HilbertResult h = stabilized_hilbert(p, w, 1, max_cap, exec);
  if (!h.converged) {
    throw UnconvergedError("Hilbert function of '" + p.name() + "' did not stabilize by word cap " +
                               std::to_string(max_cap),
                           h.unconverged_degrees);
  }
  ComparisonReport report;
  report.cap = h.cap;
  for (std::int64_t d = w.lo; d <= w.hi; ++d) {
    const std::int64_t a = h.dims.at(d);
    auto it = target.find(d);
    const std::int64_t m = it == target.end() ? 0 : it->second;
    if (a != m) report.mismatches.push_back({d, a, m});
  }
  return report;
}

}  // namespace brieskorn
