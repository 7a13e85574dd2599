#include "brieskorn/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "brieskorn/errors.hpp"

#ifndef BRIESKORN_DEFAULT_DATA_DIR
#define BRIESKORN_DEFAULT_DATA_DIR "data"
#endif

namespace brieskorn {

namespace {

std::vector<std::int64_t> parse_key(const std::string& key, const std::string& origin) {
  std::vector<std::int64_t> out;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(origin + ": bad exponent '" + item + "' in key \"" + key + "\"");
    }
  }
  if (out.size() < 2) throw ValidationError(origin + ": key \"" + key + "\" needs two or more exponents");
  for (std::int64_t a : out) {
    if (a < 2) throw ValidationError(origin + ": key \"" + key + "\" has exponent below 2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(BettiSource s) {
  return s == BettiSource::BuiltIn ? "BuiltIn" : "UserConfig";
}

void validate_betti(std::size_t key_size, const std::vector<std::int64_t>& betti,
                    const std::string& context) {
  const std::size_t expected = 2 * key_size - 2;
  if (betti.size() != expected) {
    throw ValidationError(context + ": expected " + std::to_string(expected) + " Betti numbers, got " +
                          std::to_string(betti.size()));
  }
  for (std::int64_t b : betti) {
    if (b < 0) throw ValidationError(context + ": negative Betti number");
  }
  if (betti.front() < 1) throw ValidationError(context + ": b_0 must be at least 1");
  if (!std::equal(betti.begin(), betti.end(), betti.rbegin())) {
    throw ValidationError(context + ": Betti list is not palindromic");
  }
}

void BettiTable::add_bundled(std::vector<std::int64_t> key, std::vector<std::int64_t> betti) {
  std::sort(key.begin(), key.end());
  validate_betti(key.size(), betti, "bundled entry " + join_key(key));
  bundled_[std::move(key)] = std::move(betti);
}

void BettiTable::add_user(std::vector<std::int64_t> key, std::vector<std::int64_t> betti) {
  std::sort(key.begin(), key.end());
  validate_betti(key.size(), betti, "user entry " + join_key(key));
  user_[std::move(key)] = std::move(betti);
}

void BettiTable::load_json(std::string_view text, const std::string& origin, bool user) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError(origin + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!key.empty() && key.front() == '_') continue;  // comment fields
    auto exps = parse_key(key, origin);
    if (!value.is_array()) throw ValidationError(origin + ": value for \"" + key + "\" is not an array");
    std::vector<std::int64_t> betti;
    for (const auto& v : value) {
      if (!v.is_number_integer()) throw ValidationError(origin + ": non-integer Betti number in \"" + key + "\"");
      betti.push_back(v.get<std::int64_t>());
    }
    validate_betti(exps.size(), betti, origin + " \"" + key + "\"");
    (user ? user_ : bundled_)[std::move(exps)] = std::move(betti);
  }
}

void BettiTable::load_user_json(std::string_view text, const std::string& origin) {
  load_json(text, origin, true);
}

void BettiTable::load_user_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open Betti file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  load_json(ss.str(), file.string(), true);
}

BettiTable BettiTable::bundled(const std::filesystem::path& data_dir) {
  BettiTable table;
  const auto dir = data_dir / "betti";
  if (!std::filesystem::is_directory(dir)) return table;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    table.load_json(ss.str(), f.filename().string(), false);
  }
  return table;
}

const std::vector<std::int64_t>* BettiTable::user(const std::vector<std::int64_t>& key) const {
  auto it = user_.find(key);
  return it == user_.end() ? nullptr : &it->second;
}

const std::vector<std::int64_t>* BettiTable::bundled_entry(const std::vector<std::int64_t>& key) const {
  auto it = bundled_.find(key);
  return it == bundled_.end() ? nullptr : &it->second;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("BRIESKORN_DATA_DIR"); env && *env) return env;
  return BRIESKORN_DEFAULT_DATA_DIR;
}

BettiResolution resolve_betti(std::vector<std::int64_t> sub_tuple, const BettiTable& table) {
  std::sort(sub_tuple.begin(), sub_tuple.end());
  if (sub_tuple.size() < 2) {
    throw ValidationError("Betti lookup needs two or more exponents, got (" + join_key(sub_tuple) + ")");
  }
  if (const auto* b = table.user(sub_tuple)) return {*b, BettiSource::UserConfig};
  if (const auto* b = table.bundled_entry(sub_tuple)) return {*b, BettiSource::BuiltIn};

  const auto m = static_cast<std::int64_t>(sub_tuple.size());
  if (m == 2) {
    const std::int64_t g = std::gcd(sub_tuple[0], sub_tuple[1]);
    return {{g, g}, BettiSource::BuiltIn};
  }
  if (std::all_of(sub_tuple.begin(), sub_tuple.end(), [](std::int64_t a) { return a == 2; })) {
    // Unit cotangent bundle of S^{m-1}.
    std::vector<std::int64_t> betti(static_cast<std::size_t>(2 * m - 2), 0);
    for (std::int64_t d : {std::int64_t{0}, m - 2, m - 1, 2 * m - 3}) betti[static_cast<std::size_t>(d)] = 1;
    return {betti, BettiSource::BuiltIn};
  }
  throw MissingBettiError(std::move(sub_tuple));
}

std::int64_t robbin_salamon_index(const ExponentTuple& t, std::int64_t L) {
  if (L < 1) throw ValidationError("Robbin-Salamon index needs L >= 1, got " + std::to_string(L));
  std::int64_t sum = 0;
  for (std::int64_t a : t.exponents()) {
    const std::int64_t fl = L / a;
    const std::int64_t ce = fl + (L % a != 0 ? 1 : 0);
    sum += fl + ce;
  }
  return sum - 2 * L;
}

std::vector<std::size_t> active_set(const ExponentTuple& t, std::int64_t L) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (L == 0 || L % t.exponent(j) == 0) out.push_back(j);
  }
  return out;
}

const Stratum* StrataList::find(std::int64_t L) const {
  auto it = std::lower_bound(strata.begin(), strata.end(), L,
                             [](const Stratum& s, std::int64_t v) { return s.L < v; });
  return (it != strata.end() && it->L == L) ? &*it : nullptr;
}

std::optional<Stratum> make_stratum(const ExponentTuple& t, std::int64_t L, const BettiTable& betti) {
  if (L < 0) throw ValidationError("stratum time parameter must be nonnegative");
  Stratum s;
  s.L = L;
  s.active_set = active_set(t, L);
  if (s.active_set.size() < 2) return std::nullopt;
  for (std::size_t j : s.active_set) s.sub_tuple.push_back(t.exponent(j));
  std::sort(s.sub_tuple.begin(), s.sub_tuple.end());
  s.dim = 2 * static_cast<std::int64_t>(s.active_set.size()) - 3;
  s.mu_rs = L == 0 ? 0 : robbin_salamon_index(t, L);
  auto res = resolve_betti(s.sub_tuple, betti);
  s.betti = std::move(res.betti);
  s.betti_source = res.source;
  return s;
}

StrataList enumerate_strata(const ExponentTuple& t, std::int64_t max_L, const BettiTable& betti) {
  if (max_L < 0) throw ValidationError("max_L must be nonnegative");
  StrataList out{t, max_L, {}};
  for (std::int64_t L = 0; L <= max_L; ++L) {
    if (auto s = make_stratum(t, L, betti)) out.strata.push_back(std::move(*s));
  }
  return out;
}

}  // namespace brieskorn
