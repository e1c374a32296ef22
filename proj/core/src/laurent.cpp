#include "polycount/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polycount {

LaurentSeries::LaurentSeries(long min_order, long truncation)
    : min_order_(min_order), truncation_(truncation) {
  if (truncation < min_order - 1) throw std::invalid_argument("LaurentSeries: empty order range");
  coeffs_.resize(static_cast<std::size_t>(truncation - min_order + 1));
}

LaurentSeries LaurentSeries::monomial(long order, const Rational& c, long truncation) {
  LaurentSeries s(std::min(order, truncation + 1), truncation);
  s.add_to(order, c);
  return s;
}

LaurentSeries LaurentSeries::one_plus_z_pow(long e, long truncation) {
  LaurentSeries s(0, std::max(truncation, -1L));
  // Generalised binomial coefficients e(e-1)...(e-k+1)/k!.
  Rational c(1);
  for (long k = 0; k <= truncation; ++k) {
    s.coeffs_[static_cast<std::size_t>(k)] = c;
    c = c * Rational(e - k) / Rational(k + 1);
  }
  return s;
}

Rational LaurentSeries::coefficient(long order) const {
  if (order < min_order_ || order > truncation_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(order - min_order_)];
}

void LaurentSeries::add_to(long order, const Rational& c) {
  if (order > truncation_) return;
  if (order < min_order_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_order_ - order), Rational(0));
    min_order_ = order;
  }
  coeffs_[static_cast<std::size_t>(order - min_order_)] += c;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  truncation_ = std::min(truncation_, rhs.truncation_);
  if (truncation_ - min_order_ + 1 < static_cast<long>(coeffs_.size())) {
    coeffs_.resize(static_cast<std::size_t>(std::max(truncation_ - min_order_ + 1, 0L)));
  }
  for (long o = rhs.min_order_; o <= rhs.truncation_; ++o) {
    const Rational c = rhs.coefficient(o);
    if (!c.is_zero()) add_to(o, c);
  }
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Valid truncation of a product: each factor is only known up to its own
  // truncation, shifted by the other's lowest order.
  const long trunc = std::min(a.truncation_ + b.min_order_, b.truncation_ + a.min_order_);
  const long lo = a.min_order_ + b.min_order_;
  LaurentSeries out(std::min(lo, trunc + 1), trunc);
  for (long i = a.min_order_; i <= a.truncation_; ++i) {
    const Rational& ca = a.coeffs_[static_cast<std::size_t>(i - a.min_order_)];
    if (ca.is_zero()) continue;
    for (long j = b.min_order_; j <= b.truncation_ && i + j <= trunc; ++j) {
      const Rational& cb = b.coeffs_[static_cast<std::size_t>(j - b.min_order_)];
      if (!cb.is_zero()) out.add_to(i + j, ca * cb);
    }
  }
  return out;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long o = min_order_; o <= truncation_; ++o) {
    const Rational c = coefficient(o);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")z^" << o;
  }
  if (first) os << "0";
  os << " + O(z^" << truncation_ + 1 << ")";
  return os.str();
}

}  // namespace polycount
