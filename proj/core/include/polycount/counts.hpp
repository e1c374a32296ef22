#pragma once

// Counting engines for polygon diagrams (P), pruned polygon diagrams (Q) and
// pruned arc diagrams (N) on a genus-g surface with n boundary components,
// plus the annular cuff counts L(b, a).

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "polycount/exact.hpp"

namespace polycount {

enum class Family { P, Q, N };

char family_letter(Family f);
/// Accepts "p", "q", "n" in either case.
std::optional<Family> parse_family(std::string_view text);

struct SurfaceClass {
  int g = 0;
  int n = 1;

  [[nodiscard]] bool is_disc() const { return g == 0 && n == 1; }
  [[nodiscard]] bool is_annulus() const { return g == 0 && n == 2; }
  [[nodiscard]] bool is_pants() const { return g == 0 && n == 3; }
  /// Everything except the disc and the annulus.
  [[nodiscard]] bool is_stable() const { return !is_disc() && !is_annulus(); }
  /// 2g - 2 + n
  [[nodiscard]] int euler_complexity() const { return 2 * g - 2 + n; }
};

/// Boundary vertex counts mu_1, ..., mu_n.
using Profile = std::vector<long>;

Profile canonical(Profile mu);
bool all_zero(std::span<const long> mu);

struct CountKey {
  Family family = Family::P;
  int g = 0;
  int n = 0;
  Profile canonical;  // sorted descending

  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Builds the canonical key for a (possibly unsorted) profile.
CountKey make_key(Family family, int g, const Profile& mu);

/// Write-once memo of count values. Safe for concurrent lookups and inserts;
/// racing inserts of the same key must agree or ContractError is thrown.
class CountCache {
 public:
  [[nodiscard]] std::optional<Rational> lookup(const CountKey& key) const;
  /// Stores value (must be a non-negative integer) and returns the stored copy.
  Rational insert(const CountKey& key, const Rational& value);
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::map<CountKey, Rational> snapshot() const;
  void clear();

  /// Line format: "FAMILY g n mu1,...,mun VALUE", lines sorted lexicographically.
  void save(std::ostream& os) const;
  /// Merges records from a stream; malformed lines throw std::invalid_argument.
  void load(std::istream& is);
  void save_file(const std::string& path) const;
  void load_file(const std::string& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<CountKey, Rational> values_;
};

/// Number of cuff diagrams with b outer and a inner vertices.
Rational cuff_count(long b, long a);

/// Closed forms for Q on the disc, annulus and pants, the all-zero profile of
/// any surface, and (when include_torus is set) the once-holed torus.
std::optional<Rational> q_base(int g, int n, const Profile& mu, bool include_torus = false);

/// Closed forms for P on the disc, annulus, pants and once-holed torus.
std::optional<Rational> p_closed(int g, int n, const Profile& mu);

/// Closed forms for N on the pants and once-holed torus, and all-zero profiles.
std::optional<Rational> n_base(int g, int n, const Profile& mu);

/// Memoised recursive evaluator.
///
/// In Canonical mode profiles are sorted descending before lookup and the
/// recursion pivots on the (largest) first entry; values are shared through
/// a CountCache. In FirstPositive mode the profile order is kept, the pivot is
/// the first positive entry, and memoisation is keyed on the ordered profile
/// in a private table. The second mode exists so that symmetry can be
/// checked without relying on canonical sorting.
class CountEngine {
 public:
  enum class Pivot { Canonical, FirstPositive };

  explicit CountEngine(std::shared_ptr<CountCache> cache = std::make_shared<CountCache>(),
                       Pivot pivot = Pivot::Canonical);
  ~CountEngine();
  CountEngine(const CountEngine&) = delete;
  CountEngine& operator=(const CountEngine&) = delete;

  Rational q_count(int g, const Profile& mu);
  Rational p_recursive(int g, const Profile& mu);
  /// Cuff-transform route from Q; rejects the disc and the annulus.
  Rational p_from_q(int g, const Profile& mu);
  Rational n_count(int g, const Profile& mu);

  [[nodiscard]] const std::shared_ptr<CountCache>& cache() const { return cache_; }
  [[nodiscard]] Pivot pivot() const { return pivot_; }

 private:
  struct OrderedMemo;

  std::optional<Rational> recall(Family f, int g, const Profile& mu) const;
  Rational remember(Family f, int g, const Profile& mu, const Rational& value);
  std::size_t pivot_index(const Profile& mu) const;

  Rational q_step(int g, const Profile& mu, std::size_t pivot);
  Rational p_step(int g, const Profile& mu, std::size_t pivot);
  Rational n_step(int g, const Profile& mu, std::size_t pivot);

  std::shared_ptr<CountCache> cache_;
  Pivot pivot_;
  std::unique_ptr<OrderedMemo> ordered_;
};

/// Process-wide canonical engine used by the free functions below.
CountEngine& default_engine();

Rational q_count(int g, int n, const Profile& mu);
Rational p_recursive(int g, int n, const Profile& mu);
Rational p_from_q(int g, int n, const Profile& mu);
Rational n_count(int g, int n, const Profile& mu);

/// Validates (g, n, mu) against each other; throws std::invalid_argument.
void check_arguments(int g, int n, const Profile& mu);

}  // namespace polycount
