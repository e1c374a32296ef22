#include "polycount/exact.hpp"

#include <ostream>

namespace polycount {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) {
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    }
    std::size_t start = (part.front() == '-') ? 1 : 0;
    if (start == part.size()) {
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
      }
    }
    return mpz_class(std::string(part), 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("Rational: negative denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw ContractError("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational power(const Rational& x, long e) {
  if (e < 0) {
    return Rational(1) / power(x, -e);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Rational pow2(long e) { return power(Rational(2), e); }

Rational factorial(long n) {
  if (n < 0) {
    throw ContractError("factorial of a negative number");
  }
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

Rational binomial(long n, long k) {
  if (n < -1) {
    throw ContractError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                        "): n < -1 is outside the formula domain");
  }
  if (k < 0) {
    throw ContractError("binomial: negative k");
  }
  if (n == -1) {
    return Rational(k == 0 ? 1 : 0);
  }
  if (k > n) {
    return Rational(0);
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational odd_falling(long mu, long a) {
  if (a < 0) {
    throw ContractError("odd_falling: negative length");
  }
  mpz_class out = 1;
  for (long t = 0; t <= a; ++t) {
    out *= (2 * mu - 1 - 2 * t);
  }
  return Rational(out);
}

long bar(long n) {
  if (n < 0) {
    throw std::invalid_argument("bar: negative argument");
  }
  return n == 0 ? 1 : n;
}

long tilde(long n) { return (n > 0 && n % 2 == 0) ? n : 0; }

Rational tilde_sum(long d, const std::function<Rational(long, long)>& f, long min_first) {
  const long total = d >= 0 ? d : -d;
  Rational acc;
  for (long i = min_first; i <= total; ++i) {
    const long x = total - i;
    if (x == 0) {
      continue;
    }
    acc += Rational(x) * f(i, x);
  }
  return d >= 0 ? acc : -acc;
}

mpz_class require_integer(const Rational& r, std::string_view what) {
  if (!r.is_integer()) {
    throw ContractError(std::string(what) + " is not an integer: " + r.str());
  }
  return r.numerator();
}

}  // namespace polycount
