#include "polycount/counts.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace polycount {

char family_letter(Family f) {
  switch (f) {
    case Family::P: return 'P';
    case Family::Q: return 'Q';
    case Family::N: return 'N';
  }
  return '?';
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "p" || text == "P") return Family::P;
  if (text == "q" || text == "Q") return Family::Q;
  if (text == "n" || text == "N") return Family::N;
  return std::nullopt;
}

Profile canonical(Profile mu) {
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

bool all_zero(std::span<const long> mu) {
  return std::all_of(mu.begin(), mu.end(), [](long m) { return m == 0; });
}

CountKey make_key(Family family, int g, const Profile& mu) {
  return CountKey{family, g, static_cast<int>(mu.size()), canonical(mu)};
}

void check_arguments(int g, int n, const Profile& mu) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (n < 1) throw std::invalid_argument("need at least one boundary component");
  if (mu.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("profile has " + std::to_string(mu.size()) + " entries, expected " +
                                std::to_string(n));
  }
  if (std::any_of(mu.begin(), mu.end(), [](long m) { return m < 0; })) {
    throw std::invalid_argument("profile entries must be non-negative");
  }
}

// ---------------------------------------------------------------------------
// CountCache

std::optional<Rational> CountCache::lookup(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Rational CountCache::insert(const CountKey& key, const Rational& value) {
  if (!value.is_integer() || value.sign() < 0) {
    throw ContractError(std::string("count ") + family_letter(key.family) +
                        " is not a non-negative integer: " + value.str());
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw ContractError("cache conflict: stored " + it->second.str() + ", new " + value.str());
  }
  return it->second;
}

std::size_t CountCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

std::map<CountKey, Rational> CountCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

void CountCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

// ---------------------------------------------------------------------------
// Closed forms

Rational cuff_count(long b, long a) {
  if (a < 0 || b < 0) throw std::invalid_argument("cuff_count: negative argument");
  if (a > b) return Rational(0);
  if (a == 0 && b == 0) return Rational(1);
  if (a == 0) return binomial(2 * b, b) / Rational(2);
  return Rational(a) * binomial(2 * b, b - a);
}

namespace {

// binom(2mu - 1, mu), with binom(-1, 0) = 1 at mu = 0.
Rational central(long mu) { return binomial(2 * mu - 1, mu); }

Rational q03(Profile mu) {
  mu = canonical(std::move(mu));
  const long a = mu[0], b = mu[1], c = mu[2];
  if (c > 0) return Rational(2 * a * b * c);
  if (b > 0) return Rational(a * b);
  return Rational(a % 2 == 0 ? bar(a) : 0);
}

Rational q11(long mu) {
  if (mu == 0) return Rational(1);
  const Rational m(mu);
  if (mu % 2 == 1) return (m * m * m - m) / Rational(24);
  return (m * m * m + Rational(8) * m) / Rational(24);
}

}  // namespace

std::optional<Rational> q_base(int g, int n, const Profile& mu, bool include_torus) {
  check_arguments(g, n, mu);
  if (all_zero(mu)) return Rational(1);
  if (g == 0 && n == 1) return Rational(0);
  if (g == 0 && n == 2) return mu[0] == mu[1] ? Rational(bar(mu[0])) : Rational(0);
  if (g == 0 && n == 3) return q03(mu);
  if (include_torus && g == 1 && n == 1) return q11(mu[0]);
  return std::nullopt;
}

std::optional<Rational> p_closed(int g, int n, const Profile& mu) {
  check_arguments(g, n, mu);
  if (g == 0 && n == 1) {
    const long m = mu[0];
    if (m == 0) return Rational(1);
    return central(m) * Rational(2) / Rational(m + 1);
  }
  if (g == 0 && n == 2) {
    const Profile s = canonical(mu);
    if (s[1] == 0) return central(s[0]);
    const Rational a(s[0]), b(s[1]);
    return central(s[0]) * central(s[1]) * (Rational(2) * a * b / (a + b) + Rational(1));
  }
  if (g == 0 && n == 3) {
    Rational prefactor(1);
    Rational bracket(1);
    Rational triple(2);
    for (long m : mu) {
      prefactor *= central(m);
      triple *= Rational(m);
      // (mu^2 - mu) / (2mu - 1) is 0 at mu = 0, as written.
      bracket += Rational(m * m - m) / Rational(2 * m - 1);
    }
    bracket += triple;
    // Sum over unordered pairs {i, j}.
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) bracket += Rational(mu[i] * mu[j]);
    }
    return prefactor * bracket;
  }
  if (g == 1 && n == 1) {
    const long m = mu[0];
    const Rational x(m);
    return central(m) / Rational(2 * m - 1) *
           (x * x * x + Rational(3) * x * x + Rational(20) * x - Rational(12)) / Rational(12);
  }
  return std::nullopt;
}

std::optional<Rational> n_base(int g, int n, const Profile& mu) {
  check_arguments(g, n, mu);
  if (all_zero(mu)) return Rational(1);
  if (g == 0 && n == 3) {
    const long total = mu[0] + mu[1] + mu[2];
    if (total % 2 != 0) return Rational(0);
    return Rational(bar(mu[0]) * bar(mu[1]) * bar(mu[2]));
  }
  if (g == 1 && n == 1) {
    const long m = mu[0];
    if (m % 2 != 0) return Rational(0);
    const Rational x(m);
    return (x * x * x + Rational(20) * x) / Rational(48);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CountEngine

struct CountEngine::OrderedMemo {
  std::map<std::tuple<Family, int, Profile>, Rational> values;
};

CountEngine::CountEngine(std::shared_ptr<CountCache> cache, Pivot pivot)
    : cache_(std::move(cache)), pivot_(pivot), ordered_(std::make_unique<OrderedMemo>()) {
  if (!cache_) cache_ = std::make_shared<CountCache>();
}

CountEngine::~CountEngine() = default;

std::optional<Rational> CountEngine::recall(Family f, int g, const Profile& mu) const {
  if (pivot_ == Pivot::Canonical) return cache_->lookup(make_key(f, g, mu));
  auto it = ordered_->values.find({f, g, mu});
  if (it == ordered_->values.end()) return std::nullopt;
  return it->second;
}

Rational CountEngine::remember(Family f, int g, const Profile& mu, const Rational& value) {
  if (pivot_ == Pivot::Canonical) return cache_->insert(make_key(f, g, mu), value);
  if (!value.is_integer() || value.sign() < 0) {
    throw ContractError(std::string("count ") + family_letter(f) +
                        " is not a non-negative integer: " + value.str());
  }
  ordered_->values.emplace(std::tuple{f, g, mu}, value);
  return value;
}

std::size_t CountEngine::pivot_index(const Profile& mu) const {
  if (pivot_ == Pivot::Canonical) {
    return static_cast<std::size_t>(std::max_element(mu.begin(), mu.end()) - mu.begin());
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] > 0) return i;
  }
  throw ContractError("recursion needs a positive pivot entry");
}

namespace {

// Splits a profile into the pivot value and the remaining entries, in order.
Profile without(const Profile& mu, std::size_t skip) {
  Profile rest;
  rest.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i != skip) rest.push_back(mu[i]);
  }
  return rest;
}

Profile prepend(std::initializer_list<long> head, const Profile& tail) {
  Profile out(head);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

bool is_disc_or_annulus(int g, std::size_t n) { return g == 0 && n <= 2; }

// Enumerates every labelled split I | J of `rest` together with g1 + g2 = g.
template <typename F>
void for_each_split(int g, const Profile& rest, F&& visit) {
  const std::size_t m = rest.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Profile part_i;
    Profile part_j;
    for (std::size_t t = 0; t < m; ++t) {
      ((mask >> t) & 1U ? part_i : part_j).push_back(rest[t]);
    }
    for (int g1 = 0; g1 <= g; ++g1) visit(g1, g - g1, part_i, part_j);
  }
}

}  // namespace

Rational CountEngine::q_count(int g, const Profile& input) {
  if (g < 0) return Rational(0);
  check_arguments(g, static_cast<int>(input.size()), input);
  const int n = static_cast<int>(input.size());
  if (auto base = q_base(g, n, input)) return *base;
  const Profile mu = pivot_ == Pivot::Canonical ? canonical(input) : input;
  if (auto hit = recall(Family::Q, g, mu)) return *hit;
  return remember(Family::Q, g, mu, q_step(g, mu, pivot_index(mu)));
}

Rational CountEngine::q_step(int g, const Profile& mu, std::size_t pivot) {
  const long mu1 = mu[pivot];
  const Profile rest = without(mu, pivot);
  const long t1 = tilde(mu1);
  Rational total;

  // Non-separating edge from the pivot boundary to itself.
  if (g >= 1) {
    for (long i = 1; i <= mu1; ++i) {
      for (long j = 0; i + j < mu1; ++j) {
        const long m = mu1 - i - j;
        total += Rational(m) * q_count(g - 1, prepend({i, j}, rest));
      }
    }
    if (t1 != 0) total += Rational(t1, 2) * q_count(g - 1, prepend({0, 0}, rest));
  }

  // Edges reaching another boundary, or cutting off an annulus around it.
  for (std::size_t k = 0; k < rest.size(); ++k) {
    const long muk = rest[k];
    const Profile others = without(rest, k);
    if (muk > 0) {
      const Rational weight(muk);
      for (long i = 1; i < mu1 + muk; ++i) {
        const long m = mu1 + muk - i;
        total += Rational(m) * weight * q_count(g, prepend({i}, others));
      }
      total += tilde_sum(mu1 - muk, [&](long i, long) { return weight * q_count(g, prepend({i}, others)); });
      total += Rational(mu1) * weight * q_count(g, prepend({0}, others));
    } else {
      for (long i = 1; i < mu1; ++i) {
        total += Rational(mu1 - i) * q_count(g, prepend({i}, others));
      }
      if (t1 != 0) total += Rational(t1) * q_count(g, prepend({0}, others));
    }
  }

  // Separating edge; neither side may be a disc or an annulus.
  for_each_split(g, rest, [&](int g1, int g2, const Profile& part_i, const Profile& part_j) {
    if (is_disc_or_annulus(g1, part_i.size() + 1) || is_disc_or_annulus(g2, part_j.size() + 1)) return;
    for (long i = 1; i <= mu1; ++i) {
      for (long j = 0; i + j < mu1; ++j) {
        const long m = mu1 - i - j;
        const Rational left = q_count(g1, prepend({i}, part_i));
        if (left.is_zero()) continue;
        total += Rational(m) * left * q_count(g2, prepend({j}, part_j));
      }
    }
    if (t1 != 0) {
      total += Rational(t1, 2) * q_count(g1, prepend({0}, part_i)) * q_count(g2, prepend({0}, part_j));
    }
  });
  return total;
}

Rational CountEngine::p_recursive(int g, const Profile& input) {
  if (g < 0) return Rational(0);
  check_arguments(g, static_cast<int>(input.size()), input);
  if (all_zero(input)) return Rational(1);
  const Profile mu = pivot_ == Pivot::Canonical ? canonical(input) : input;
  if (auto hit = recall(Family::P, g, mu)) return *hit;
  return remember(Family::P, g, mu, p_step(g, mu, pivot_index(mu)));
}

Rational CountEngine::p_step(int g, const Profile& mu, std::size_t pivot) {
  const long mu1 = mu[pivot];
  const Profile rest = without(mu, pivot);

  // The pivot vertex is a 1-gon.
  Rational total = p_recursive(g, prepend({mu1 - 1}, rest));

  // Its outgoing edge ends on another boundary.
  for (std::size_t k = 0; k < rest.size(); ++k) {
    const long muk = rest[k];
    if (muk == 0) continue;
    total += Rational(muk) * p_recursive(g, prepend({mu1 + muk - 1}, without(rest, k)));
  }

  // Its outgoing edge returns to the pivot boundary.
  for (long j = 1; j <= mu1 - 1; ++j) {
    const long i = mu1 - 1 - j;
    if (g >= 1) total += p_recursive(g - 1, prepend({i, j}, rest));
    for_each_split(g, rest, [&](int g1, int g2, const Profile& part_i, const Profile& part_j) {
      total += p_recursive(g1, prepend({i}, part_i)) * p_recursive(g2, prepend({j}, part_j));
    });
  }
  return total;
}

Rational CountEngine::p_from_q(int g, const Profile& mu) {
  check_arguments(g, static_cast<int>(mu.size()), mu);
  const SurfaceClass surface{g, static_cast<int>(mu.size())};
  if (!surface.is_stable()) {
    throw ContractError("p_from_q: the cuff transform does not apply to the disc or annulus");
  }
  const std::size_t n = mu.size();
  Profile nu(n, 0);
  Rational primed;
  // Odometer over 0 <= nu_i <= mu_i.
  while (true) {
    long zeros = 0;
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (nu[i] == 0) ++zeros;
      term *= binomial(2 * mu[i], mu[i] - nu[i]);
    }
    const Rational q = q_count(g, nu);
    if (!q.is_zero()) primed += q * pow2(-zeros) * term;

    std::size_t pos = 0;
    while (pos < n && nu[pos] == mu[pos]) nu[pos++] = 0;
    if (pos == n) break;
    ++nu[pos];
  }
  const long zeros = std::count(mu.begin(), mu.end(), 0L);
  return primed * pow2(zeros);
}

Rational CountEngine::n_count(int g, const Profile& input) {
  if (g < 0) return Rational(0);
  check_arguments(g, static_cast<int>(input.size()), input);
  const int n = static_cast<int>(input.size());
  if (auto base = n_base(g, n, input)) return *base;
  if (g == 0 && n <= 2) {
    throw ContractError("n_count: no arc-diagram formula for the disc or annulus");
  }
  const Profile mu = pivot_ == Pivot::Canonical ? canonical(input) : input;
  if (auto hit = recall(Family::N, g, mu)) return *hit;
  return remember(Family::N, g, mu, n_step(g, mu, pivot_index(mu)));
}

Rational CountEngine::n_step(int g, const Profile& mu, std::size_t pivot) {
  const long mu1 = mu[pivot];
  const Profile rest = without(mu, pivot);
  Rational total;

  if (g >= 1) {
    for (long i = 0; i <= mu1; ++i) {
      for (long j = 0; i + j < mu1; ++j) {
        const long m = mu1 - i - j;
        if (m % 2 != 0) continue;
        total += Rational(m / 2) * n_count(g - 1, prepend({i, j}, rest));
      }
    }
  }

  for (std::size_t k = 0; k < rest.size(); ++k) {
    const long muk = rest[k];
    const Profile others = without(rest, k);
    if (muk > 0) {
      const Rational weight(muk);
      for (long i = 0; i < mu1 + muk; ++i) {
        const long m = mu1 + muk - i;
        if (m % 2 != 0) continue;
        total += Rational(m / 2) * weight * n_count(g, prepend({i}, others));
      }
      total += tilde_sum(
          mu1 - muk,
          [&](long i, long x) {
            if (x % 2 != 0) return Rational(0);
            return weight * n_count(g, prepend({i}, others)) / Rational(2);
          },
          0);
    } else {
      for (long i = 0; i < mu1; ++i) {
        const long m = mu1 - i;
        if (m % 2 != 0) continue;
        total += Rational(m) * n_count(g, prepend({i}, others));
      }
    }
  }

  for_each_split(g, rest, [&](int g1, int g2, const Profile& part_i, const Profile& part_j) {
    if (is_disc_or_annulus(g1, part_i.size() + 1) || is_disc_or_annulus(g2, part_j.size() + 1)) return;
    for (long i = 0; i <= mu1; ++i) {
      for (long j = 0; i + j < mu1; ++j) {
        const long m = mu1 - i - j;
        if (m % 2 != 0) continue;
        const Rational left = n_count(g1, prepend({i}, part_i));
        if (left.is_zero()) continue;
        total += Rational(m / 2) * left * n_count(g2, prepend({j}, part_j));
      }
    }
  });
  return total;
}

CountEngine& default_engine() {
  static CountEngine engine;
  return engine;
}

namespace {

void check_n(int n, const Profile& mu) {
  if (mu.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("profile length does not match n");
  }
}

}  // namespace

Rational q_count(int g, int n, const Profile& mu) {
  check_n(n, mu);
  return default_engine().q_count(g, mu);
}

Rational p_recursive(int g, int n, const Profile& mu) {
  check_n(n, mu);
  return default_engine().p_recursive(g, mu);
}

Rational p_from_q(int g, int n, const Profile& mu) {
  check_n(n, mu);
  return default_engine().p_from_q(g, mu);
}

Rational n_count(int g, int n, const Profile& mu) {
  check_n(n, mu);
  return default_engine().n_count(g, mu);
}

}  // namespace polycount
