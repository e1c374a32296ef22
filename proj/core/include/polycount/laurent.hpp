#pragma once

#include <string>
#include <vector>

#include "polycount/exact.hpp"

namespace polycount {

/// Univariate Laurent series in z truncated at a fixed maximal order: terms
/// of order > truncation are dropped by every operation.
class LaurentSeries {
 public:
  LaurentSeries(long min_order, long truncation);

  static LaurentSeries monomial(long order, const Rational& c, long truncation);
  /// (1 + z)^e for any integer e, as a power series.
  static LaurentSeries one_plus_z_pow(long e, long truncation);

  [[nodiscard]] long min_order() const { return min_order_; }
  [[nodiscard]] long truncation() const { return truncation_; }
  /// Coefficient of z^order (0 outside the stored range).
  [[nodiscard]] Rational coefficient(long order) const;
  void add_to(long order, const Rational& c);

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Rational& c);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  [[nodiscard]] std::string to_string() const;

 private:
  long min_order_;
  long truncation_;
  std::vector<Rational> coeffs_;  // index 0 is z^min_order_
};

}  // namespace polycount
