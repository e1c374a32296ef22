#pragma once

// Binomial moment sums, parity power sums and the constants they produce.

#include <optional>
#include <span>
#include <vector>

#include "polycount/exact.hpp"
#include "polycount/polynomial.hpp"

namespace polycount {

enum class Parity { Even, Odd };

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(long i);

/// The pair of univariate polynomials (P_alpha, Q_alpha) with
///   sum_{0<=i<=n, i even} i^(2a+1) binom(2n, n-i) = binom(2n, n) / odd_falling(n, a) * P_a(n)
/// and the same with odd i and Q_a. Built from P_0 = (n^2 - n)/2, Q_0 = n^2/2 by
///   X_{a+1}(n) = n^2 [ (2n - 2a - 3) X_a(n) - (2n - 1) X_a(n - 1) ].
struct MomentPolyPair {
  long alpha = 0;
  MultiPoly p_alpha{1};
  MultiPoly q_alpha{1};
};

MomentPolyPair moment_poly(long alpha);

/// Literal sum over 0 <= i <= n with the given parity of i^(2a+1) binom(2n, n-i).
Rational moment_sum_direct(long n, long alpha, Parity parity);

/// binom(2n, n) / odd_falling(n, a) times P_a(n) or Q_a(n). `pair` overrides the
/// polynomials (used to check that a wrong polynomial is detected).
/// Throws ContractError when the falling product vanishes or n < 1.
Rational moment_sum_closed(long n, long alpha, Parity parity,
                           const std::optional<MomentPolyPair>& pair = std::nullopt);

/// Sum of i^k over 1 <= i <= n with i of the given parity, via the parity
/// Faulhaber closed forms. n is first truncated to the largest integer <= n
/// of matching parity.
Rational power_sum_parity(long k, long n, Parity parity);
Rational power_sum_parity_direct(long k, long n, Parity parity);

/// Ordinary Faulhaber sum 1^k + ... + n^k.
Rational power_sum(long k, long n);

/// C_k = 1/(2(k+1)) sum_{0<=i<=k} 2^i binom(k+1, i) B_i, which equals k! times
/// the x^k coefficient of 1/(e^x + 1).
Rational c_constant(long k);

/// Brute-force sum over i_1..i_m >= 1 with sum n and i_t of parity parities[t]
/// of prod i_t^{k_t}. Needs m >= 2 and every k_t positive and odd
/// (std::invalid_argument otherwise).
Rational conv_parity_sum(std::span<const long> ks, long n, std::span<const Parity> parities);

struct ConvolutionFit {
  MultiPoly poly{1};
  int expected_degree = 0;
  bool odd = false;
  bool validated = false;
  Rational leading;

  [[nodiscard]] bool pass() const { return validated && odd && poly.total_degree() == expected_degree; }
};

/// Interpolates n -> conv_parity_sum over the parity class of n compatible with
/// the chosen parities and validates the result at extra nodes.
ConvolutionFit conv_parity_fit(std::span<const long> ks, std::span<const Parity> parities);

}  // namespace polycount
