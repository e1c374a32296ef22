#pragma once

// Exact multivariate polynomials, tensor-grid interpolation and
// parity-stratified quasi-polynomials.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polycount/exact.hpp"

namespace polycount {

using Exponents = std::vector<int>;

/// Polynomial in a fixed number of variables with rational coefficients.
/// Terms are kept in lexicographic exponent order; zero coefficients are
/// never stored.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponents& exps, const Rational& c);
  /// Univariate polynomial from coefficients c0 + c1 x + c2 x^2 + ...
  static MultiPoly univariate(std::span<const Rational> coeffs);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Stored coefficient, or 0. Throws std::invalid_argument on arity mismatch.
  [[nodiscard]] Rational coefficient(const Exponents& exps) const;

  /// Adds c * x^exps, dropping the term if the sum cancels.
  void add_term(const Exponents& exps, const Rational& c);

  [[nodiscard]] Rational eval(std::span<const Rational> point) const;
  [[nodiscard]] Rational eval_integers(std::span<const long> point) const;

  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree_in(std::size_t var) const;

  /// Homogeneous component of maximal total degree.
  [[nodiscard]] MultiPoly top_component() const;

  /// Human-readable form, e.g. "1/24*x1^3 - 1/24*x1".
  [[nodiscard]] std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

 private:
  void check_arity(std::size_t n) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// True iff every stored exponent is odd in every variable (vacuous for the
/// zero polynomial and for polynomials in no variables).
bool is_odd_each_variable(const MultiPoly& p);

/// Row-major tensor of rational samples; the last axis varies fastest.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<Rational> values;

  [[nodiscard]] std::size_t size() const;
};

/// Unique polynomial with degree < grid[k].size() in variable k matching every
/// tensor value. Throws std::invalid_argument on duplicate nodes or a shape
/// mismatch.
MultiPoly interpolate(const std::vector<std::vector<Rational>>& grid, const Tensor& values);

/// Exact quotient of univariate polynomials; throws ContractError if the
/// division leaves a remainder.
MultiPoly divide_exact(const MultiPoly& numerator, const MultiPoly& denominator);

/// p(x + shift) for univariate p.
MultiPoly shift_univariate(const MultiPoly& p, const Rational& shift);

std::string to_json(const MultiPoly& p);

enum class ParityClass { Zero, Odd, EvenPositive };
using ParitySignature = std::vector<ParityClass>;

ParityClass classify(long mu);
ParitySignature classify(std::span<const long> profile);
std::string parity_name(ParityClass c);

/// Every one of the 3^n signatures in lexicographic order.
std::vector<ParitySignature> all_signatures(std::size_t n);

/// One polynomial per parity signature, each in the non-Zero variables only.
class QuasiPoly {
 public:
  explicit QuasiPoly(std::size_t n = 0) : n_(n) {}

  [[nodiscard]] std::size_t arity() const { return n_; }
  [[nodiscard]] const std::map<ParitySignature, MultiPoly>& pieces() const { return pieces_; }

  void set_piece(const ParitySignature& sig, MultiPoly poly);
  [[nodiscard]] const MultiPoly& piece(const ParitySignature& sig) const;
  [[nodiscard]] bool has_piece(const ParitySignature& sig) const;

  /// Evaluates the piece selected by the profile's signature.
  [[nodiscard]] Rational eval(std::span<const long> profile) const;

 private:
  std::size_t n_;
  std::map<ParitySignature, MultiPoly> pieces_;
};

std::string to_json(const QuasiPoly& q);

}  // namespace polycount
