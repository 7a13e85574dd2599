#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/exponent_tuple.hpp"

namespace brieskorn {

enum class BettiSource { BuiltIn, UserConfig };

std::string to_string(BettiSource s);

/// GF(2) Betti numbers of Brieskorn manifolds, keyed by sorted exponent
/// sub-tuple. Two layers: bundled data (reported as BuiltIn) and user
/// files, which override bundled entries key by key.
///
/// Every entry is checked on insertion: an even number of entries
/// 2m − 2 for an m-element key (the manifold has dimension 2m − 3),
/// nonnegative, b_0 ≥ 1, and palindromic.
class BettiTable {
 public:
  BettiTable() = default;

  /// Loads every *.json under `data_dir/betti` into the bundled layer, in
  /// file name order. A missing directory yields an empty table.
  static BettiTable bundled(const std::filesystem::path& data_dir);

  void add_bundled(std::vector<std::int64_t> key, std::vector<std::int64_t> betti);
  void add_user(std::vector<std::int64_t> key, std::vector<std::int64_t> betti);

  /// JSON object {"2,2,2,4": [1,0,1,1,0,1], ...}.
  void load_user_file(const std::filesystem::path& file);
  void load_user_json(std::string_view text, const std::string& origin = "<memory>");

  const std::vector<std::int64_t>* user(const std::vector<std::int64_t>& key) const;
  const std::vector<std::int64_t>* bundled_entry(const std::vector<std::int64_t>& key) const;

  std::size_t user_size() const noexcept { return user_.size(); }
  std::size_t bundled_size() const noexcept { return bundled_.size(); }

 private:
  void load_json(std::string_view text, const std::string& origin, bool user);

  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> bundled_;
  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> user_;
};

/// Throws ValidationError if `betti` cannot be the GF(2) Betti list of a
/// closed manifold of dimension 2·key_size − 3.
void validate_betti(std::size_t key_size, const std::vector<std::int64_t>& betti,
                    const std::string& context);

/// Default data directory: $BRIESKORN_DATA_DIR if set, otherwise the
/// directory compiled in at build time.
std::filesystem::path default_data_dir();

struct BettiResolution {
  std::vector<std::int64_t> betti;
  BettiSource source;
};

/// User entries win, then bundled data, then the closed-form families:
/// all-2 tuples of length m ≥ 3 (unit cotangent bundle of S^{m−1}) and
/// pairs (p, q) (gcd(p, q) circles). Throws MissingBettiError otherwise.
BettiResolution resolve_betti(std::vector<std::int64_t> sub_tuple, const BettiTable& table);

/// Σ_j (⌊L/a_j⌋ + ⌈L/a_j⌉) − 2L for L ≥ 1.
std::int64_t robbin_salamon_index(const ExponentTuple& t, std::int64_t L);

/// Indices j with a_j | L; every index when L = 0.
std::vector<std::size_t> active_set(const ExponentTuple& t, std::int64_t L);

/// Morse–Bott submanifold of closed Reeb orbits of period L·π/2.
struct Stratum {
  std::int64_t L = 0;
  std::vector<std::size_t> active_set;
  std::vector<std::int64_t> sub_tuple;  // sorted exponents of active_set
  std::int64_t dim = 0;
  std::int64_t mu_rs = 0;
  std::vector<std::int64_t> betti;
  BettiSource betti_source = BettiSource::BuiltIn;

  bool is_constants() const noexcept { return L == 0; }
};

/// Nonempty strata for 0 ≤ L ≤ max_L, ascending in L.
struct StrataList {
  ExponentTuple tuple;
  std::int64_t max_L = 0;
  std::vector<Stratum> strata;

  const Stratum* find(std::int64_t L) const;
};

/// Builds a single stratum, or nullopt if fewer than two coordinates are
/// active at L ≥ 1.
std::optional<Stratum> make_stratum(const ExponentTuple& t, std::int64_t L, const BettiTable& betti);

StrataList enumerate_strata(const ExponentTuple& t, std::int64_t max_L, const BettiTable& betti);

}  // namespace brieskorn
