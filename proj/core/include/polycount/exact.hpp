#pragma once

// Exact rational arithmetic plus the small integer conventions used by the
// counting formulas (binomials with binom(-1, 0) = 1, bar, tilde, tilde-sum).

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polycount {

/// Raised when a formula is evaluated outside the domain on which it holds,
/// or when an internal invariant (integrality, write-once cache) is broken.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Text form is "num/den", or "num" when den == 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
      value_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "num" or "num/den"; throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

/// x^e for integer e; negative e requires x != 0.
Rational power(const Rational& x, long e);

/// 2^e for any integer e.
Rational pow2(long e);

Rational factorial(long n);

/// Binomial coefficient for n >= -1, k >= 0 with binom(-1, 0) = 1 and
/// binom(-1, k) = 0 for k > 0. Any n < -1 throws ContractError.
Rational binomial(long n, long k);

/// (2mu - 1)(2mu - 3) ... (2mu - 2a - 1), i.e. a + 1 factors.
Rational odd_falling(long mu, long a);

/// n for n > 0, 1 for n == 0; negative n throws std::invalid_argument.
long bar(long n);

/// n when n is a positive even integer, else 0.
long tilde(long n);

/// Signed sum over i + x = |d| (i >= min_first, x >= 0) of x * f(i, x),
/// taken positively for d >= 0 and negatively for d < 0. The counting
/// recursions use min_first = 1; the arc-diagram recursion uses 0.
Rational tilde_sum(long d, const std::function<Rational(long, long)>& f, long min_first = 1);

/// Throws ContractError unless r is an integer; returns the integer.
mpz_class require_integer(const Rational& r, std::string_view what);

}  // namespace polycount
