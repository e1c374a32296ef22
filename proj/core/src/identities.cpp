#include "polycount/identities.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace polycount {

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

bool matches(long i, Parity parity) { return (i % 2 == 0) == (parity == Parity::Even); }

}  // namespace

Rational bernoulli(long i) {
  if (i < 0) throw std::invalid_argument("bernoulli: negative index");
  {
    std::shared_lock lock(bernoulli_mutex);
    if (static_cast<std::size_t>(i) < bernoulli_table.size()) return bernoulli_table[static_cast<std::size_t>(i)];
  }
  std::unique_lock lock(bernoulli_mutex);
  // sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1.
  while (bernoulli_table.size() <= static_cast<std::size_t>(i)) {
    const long m = static_cast<long>(bernoulli_table.size());
    Rational acc;
    for (long k = 0; k < m; ++k) acc += binomial(m + 1, k) * bernoulli_table[static_cast<std::size_t>(k)];
    bernoulli_table.push_back(-acc / Rational(m + 1));
  }
  return bernoulli_table[static_cast<std::size_t>(i)];
}

MomentPolyPair moment_poly(long alpha) {
  if (alpha < 0) throw std::invalid_argument("moment_poly: negative alpha");
  const Rational half(1, 2);
  const std::vector<Rational> p0{Rational(0), -half, half};
  const std::vector<Rational> q0{Rational(0), Rational(0), half};
  MomentPolyPair pair{0, MultiPoly::univariate(p0), MultiPoly::univariate(q0)};

  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly x2 = x * x;
  auto step = [&](const MultiPoly& prev, long a) {
    const MultiPoly left = Rational(2) * x - MultiPoly::constant(1, Rational(2 * a + 3));
    const MultiPoly right = Rational(2) * x - MultiPoly::constant(1, Rational(1));
    return x2 * (left * prev - right * shift_univariate(prev, Rational(-1)));
  };
  for (long a = 0; a < alpha; ++a) {
    pair.p_alpha = step(pair.p_alpha, a);
    pair.q_alpha = step(pair.q_alpha, a);
    pair.alpha = a + 1;
  }
  return pair;
}

Rational moment_sum_direct(long n, long alpha, Parity parity) {
  if (n < 0 || alpha < 0) throw std::invalid_argument("moment_sum_direct: negative argument");
  Rational acc;
  for (long i = 0; i <= n; ++i) {
    if (!matches(i, parity)) continue;
    acc += power(Rational(i), 2 * alpha + 1) * binomial(2 * n, n - i);
  }
  return acc;
}

Rational moment_sum_closed(long n, long alpha, Parity parity, const std::optional<MomentPolyPair>& pair) {
  if (n < 1) throw ContractError("moment_sum_closed: needs n >= 1");
  const Rational denom = odd_falling(n, alpha);
  if (denom.is_zero()) throw ContractError("moment_sum_closed: vanishing falling product");
  const MomentPolyPair polys = pair ? *pair : moment_poly(alpha);
  const MultiPoly& poly = parity == Parity::Even ? polys.p_alpha : polys.q_alpha;
  const Rational at_n = poly.eval(std::vector<Rational>{Rational(n)});
  return binomial(2 * n, n) / denom * at_n;
}

Rational power_sum(long k, long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("power_sum: negative argument");
  // (1/(k+1)) sum (-1)^i binom(k+1, i) B_i n^{k+1-i}
  Rational acc;
  for (long i = 0; i <= k; ++i) {
    Rational term = binomial(k + 1, i) * bernoulli(i) * power(Rational(n), k + 1 - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc / Rational(k + 1);
}

Rational power_sum_parity(long k, long n, Parity parity) {
  if (k < 0) throw std::invalid_argument("power_sum_parity: negative k");
  if (!matches(n, parity)) --n;
  if (n <= 0) return Rational(0);
  const Rational x(n);
  Rational acc;
  if (parity == Parity::Even) {
    for (long i = 0; i <= k; ++i) {
      acc += pow2(i) * binomial(k + 1, i) * bernoulli(i) * power(x, k + 1 - i);
    }
    acc /= Rational(2 * (k + 1));
    // The B_1 correction term only exists when the sum reaches i = 1.
    if (k >= 1) acc += power(x, k);
    return acc;
  }
  for (long i = 0; i <= k; ++i) {
    acc += pow2(i) * binomial(k + 1, i) * bernoulli(i) * (power(x, k + 1 - i) - Rational(1));
  }
  acc /= Rational(2 * (k + 1));
  return acc + power(x, k);
}

Rational power_sum_parity_direct(long k, long n, Parity parity) {
  Rational acc;
  for (long i = 1; i <= n; ++i) {
    if (matches(i, parity)) acc += power(Rational(i), k);
  }
  return acc;
}

Rational c_constant(long k) {
  if (k < 0) throw std::invalid_argument("c_constant: negative k");
  Rational acc;
  for (long i = 0; i <= k; ++i) acc += pow2(i) * binomial(k + 1, i) * bernoulli(i);
  return acc / Rational(2 * (k + 1));
}

namespace {

Rational conv_rec(std::span<const long> ks, long n, std::span<const Parity> parities) {
  if (ks.size() == 1) {
    if (n < 1 || !matches(n, parities[0])) return Rational(0);
    return power(Rational(n), ks[0]);
  }
  Rational acc;
  for (long i = parities[0] == Parity::Odd ? 1 : 2; i < n; i += 2) {
    const Rational tail = conv_rec(ks.subspan(1), n - i, parities.subspan(1));
    if (!tail.is_zero()) acc += power(Rational(i), ks[0]) * tail;
  }
  return acc;
}

void check_conv_arguments(std::span<const long> ks, std::span<const Parity> parities, const char* what) {
  if (ks.size() != parities.size() || ks.size() < 2) {
    throw std::invalid_argument(std::string(what) + ": ks and parities must have the same length, at least 2");
  }
  for (long k : ks) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument(std::string(what) + ": exponents must be positive and odd");
  }
}

}  // namespace

Rational conv_parity_sum(std::span<const long> ks, long n, std::span<const Parity> parities) {
  check_conv_arguments(ks, parities, "conv_parity_sum");
  return conv_rec(ks, n, parities);
}

ConvolutionFit conv_parity_fit(std::span<const long> ks, std::span<const Parity> parities) {
  check_conv_arguments(ks, parities, "conv_parity_fit");
  ConvolutionFit fit;
  const long m = static_cast<long>(ks.size());
  fit.expected_degree = static_cast<int>(std::accumulate(ks.begin(), ks.end(), 0L) + m - 1);

  // The parity of n is forced by the parities of the parts.
  long parity_of_n = 0;
  for (auto p : parities) parity_of_n += (p == Parity::Odd ? 1 : 0);
  const long first = (parity_of_n % 2 == 1) ? 1 : 2;

  const std::size_t nodes = static_cast<std::size_t>(fit.expected_degree) + 1;
  std::vector<Rational> grid;
  Tensor samples{{nodes}, {}};
  for (std::size_t t = 0; t < nodes; ++t) {
    const long n = first + 2 * static_cast<long>(t);
    grid.emplace_back(n);
    samples.values.push_back(conv_parity_sum(ks, n, parities));
  }
  fit.poly = interpolate({grid}, samples);
  fit.odd = is_odd_each_variable(fit.poly);
  fit.leading = fit.poly.coefficient({fit.expected_degree});

  fit.validated = true;
  for (std::size_t t = nodes; t < nodes + 3; ++t) {
    const long n = first + 2 * static_cast<long>(t);
    if (fit.poly.eval_integers(std::vector<long>{n}) != conv_parity_sum(ks, n, parities)) {
      fit.validated = false;
    }
  }
  return fit;
}

}  // namespace polycount
