#include "polycount/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polycount {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  }
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::univariate(std::span<const Rational> coeffs) {
  MultiPoly p(1);
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    p.add_term({static_cast<int>(e)}, coeffs[e]);
  }
  return p;
}

void MultiPoly::check_arity(std::size_t n) const {
  if (n != nvars_) {
    throw std::invalid_argument("MultiPoly: expected " + std::to_string(nvars_) +
                                " variables, got " + std::to_string(n));
  }
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  check_arity(exps.size());
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  check_arity(exps.size());
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
    throw std::invalid_argument("MultiPoly: negative exponent");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  check_arity(point.size());
  // Cache powers per variable; degrees here are small.
  std::vector<std::vector<Rational>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const int deg = degree_in(v);
    powers[v].reserve(static_cast<std::size_t>(std::max(deg, 0)) + 1);
    powers[v].emplace_back(1);
    for (int e = 1; e <= deg; ++e) {
      powers[v].push_back(powers[v].back() * point[v]);
    }
  }
  Rational acc;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (exps[v] != 0) {
        term *= powers[v][static_cast<std::size_t>(exps[v])];
      }
    }
    acc += term;
  }
  return acc;
}

Rational MultiPoly::eval_integers(std::span<const long> point) const {
  std::vector<Rational> pt(point.begin(), point.end());
  return eval(pt);
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [exps, c] : terms_) {
    int d = 0;
    for (int e : exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [exps, c] : terms_) {
    best = std::max(best, exps[var]);
  }
  return best;
}

MultiPoly MultiPoly::top_component() const {
  const int d = total_degree();
  MultiPoly out(nvars_);
  for (const auto& [exps, c] : terms_) {
    int s = 0;
    for (int e : exps) s += e;
    if (s == d) {
      out.terms_.emplace(exps, c);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    if (is_const) {
      os << mag.str();
      continue;
    }
    bool need_star = false;
    if (mag != Rational(1)) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (v + 1);
      if (exps[v] > 1) os << "^" << exps[v];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_arity(rhs.nvars_);
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_arity(rhs.nvars_);
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b.nvars_);
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool is_odd_each_variable(const MultiPoly& p) {
  for (const auto& [exps, c] : p.terms()) {
    for (int e : exps) {
      if (e % 2 == 0) return false;
    }
  }
  return true;
}

std::size_t Tensor::size() const {
  std::size_t s = 1;
  for (std::size_t d : shape) s *= d;
  return s;
}

namespace {

// Row j holds the monomial coefficients of the j-th Lagrange basis polynomial.
std::vector<std::vector<Rational>> lagrange_basis(const std::vector<Rational>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<std::vector<Rational>> basis(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> poly{Rational(1)};
    Rational denom(1);
    for (std::size_t l = 0; l < k; ++l) {
      if (l == j) continue;
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t e = 0; e < poly.size(); ++e) {
        next[e + 1] += poly[e];
        next[e] -= poly[e] * nodes[l];
      }
      poly = std::move(next);
      denom *= nodes[j] - nodes[l];
    }
    for (auto& c : poly) c /= denom;
    basis[j] = std::move(poly);
  }
  return basis;
}

}  // namespace

MultiPoly interpolate(const std::vector<std::vector<Rational>>& grid, const Tensor& values) {
  const std::size_t nvars = grid.size();
  if (values.shape.size() != nvars) {
    throw std::invalid_argument("interpolate: tensor rank does not match grid");
  }
  for (std::size_t a = 0; a < nvars; ++a) {
    if (grid[a].size() != values.shape[a] || grid[a].empty()) {
      throw std::invalid_argument("interpolate: axis " + std::to_string(a) + " shape mismatch");
    }
    std::set<Rational> seen(grid[a].begin(), grid[a].end());
    if (seen.size() != grid[a].size()) {
      throw std::invalid_argument("interpolate: duplicate nodes on axis " + std::to_string(a));
    }
  }
  if (values.values.size() != values.size()) {
    throw std::invalid_argument("interpolate: value count does not match shape");
  }

  // Separable transform: along each axis replace the samples by the monomial
  // coefficients of the 1-D interpolant.
  std::vector<Rational> data = values.values;
  std::size_t stride = values.size();
  for (std::size_t a = 0; a < nvars; ++a) {
    const std::size_t len = values.shape[a];
    stride /= len;
    const auto basis = lagrange_basis(grid[a]);
    const std::size_t block = len * stride;
    std::vector<Rational> fiber(len);
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t e = 0; e < len; ++e) fiber[e] = Rational(0);
        for (std::size_t j = 0; j < len; ++j) {
          const Rational& sample = data[base + j * stride + off];
          if (sample.is_zero()) continue;
          for (std::size_t e = 0; e < len; ++e) {
            if (!basis[j][e].is_zero()) fiber[e] += basis[j][e] * sample;
          }
        }
        for (std::size_t e = 0; e < len; ++e) data[base + e * stride + off] = fiber[e];
      }
    }
  }

  MultiPoly out(nvars);
  Exponents exps(nvars, 0);
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t a = nvars; a-- > 0;) {
      exps[a] = static_cast<int>(rem % values.shape[a]);
      rem /= values.shape[a];
    }
    out.add_term(exps, data[flat]);
  }
  return out;
}

namespace {

std::vector<Rational> dense_coeffs(const MultiPoly& p) {
  if (p.nvars() != 1) {
    throw std::invalid_argument("expected a univariate polynomial");
  }
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1);
  for (const auto& [exps, coeff] : p.terms()) c[static_cast<std::size_t>(exps[0])] = coeff;
  return c;
}

}  // namespace

MultiPoly divide_exact(const MultiPoly& numerator, const MultiPoly& denominator) {
  if (denominator.is_zero()) {
    throw ContractError("divide_exact: zero divisor");
  }
  auto num = dense_coeffs(numerator);
  const auto den = dense_coeffs(denominator);
  const int dn = denominator.total_degree();
  const int nn = numerator.total_degree();
  if (nn < dn) {
    if (numerator.is_zero()) return MultiPoly(1);
    throw ContractError("divide_exact: non-zero remainder");
  }
  std::vector<Rational> quot(static_cast<std::size_t>(nn - dn) + 1);
  for (int k = nn - dn; k >= 0; --k) {
    const Rational q = num[static_cast<std::size_t>(k + dn)] / den[static_cast<std::size_t>(dn)];
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dn; ++j) {
      num[static_cast<std::size_t>(k + j)] -= q * den[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& r : num) {
    if (!r.is_zero()) throw ContractError("divide_exact: non-zero remainder");
  }
  return MultiPoly::univariate(quot);
}

MultiPoly shift_univariate(const MultiPoly& p, const Rational& shift) {
  const auto c = dense_coeffs(p);
  MultiPoly out(1);
  if (p.is_zero()) return out;
  // (x + s)^e expanded binomially.
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    for (std::size_t j = 0; j <= e; ++j) {
      out.add_term({static_cast<int>(j)}, c[e] * binomial(static_cast<long>(e), static_cast<long>(j)) *
                                             power(shift, static_cast<long>(e - j)));
    }
  }
  return out;
}

namespace {

nlohmann::json poly_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : p.terms()) {
    terms.push_back({{"exps", exps}, {"coeff", c.str()}});
  }
  return {{"vars", p.nvars()}, {"terms", terms}};
}

}  // namespace

std::string to_json(const MultiPoly& p) { return poly_json(p).dump(); }

ParityClass classify(long mu) {
  if (mu < 0) throw std::invalid_argument("classify: negative entry");
  if (mu == 0) return ParityClass::Zero;
  return mu % 2 == 1 ? ParityClass::Odd : ParityClass::EvenPositive;
}

ParitySignature classify(std::span<const long> profile) {
  ParitySignature sig;
  sig.reserve(profile.size());
  for (long mu : profile) sig.push_back(classify(mu));
  return sig;
}

std::string parity_name(ParityClass c) {
  switch (c) {
    case ParityClass::Zero: return "zero";
    case ParityClass::Odd: return "odd";
    case ParityClass::EvenPositive: return "even";
  }
  return "?";
}

std::vector<ParitySignature> all_signatures(std::size_t n) {
  std::vector<ParitySignature> out{ParitySignature{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ParitySignature> next;
    for (const auto& s : out) {
      for (auto c : {ParityClass::Zero, ParityClass::Odd, ParityClass::EvenPositive}) {
        auto t = s;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

void QuasiPoly::set_piece(const ParitySignature& sig, MultiPoly poly) {
  if (sig.size() != n_) throw std::invalid_argument("QuasiPoly: signature arity mismatch");
  const auto nonzero = static_cast<std::size_t>(
      std::count_if(sig.begin(), sig.end(), [](ParityClass c) { return c != ParityClass::Zero; }));
  if (poly.nvars() != nonzero) {
    throw std::invalid_argument("QuasiPoly: piece must be a polynomial in the non-zero variables");
  }
  pieces_.insert_or_assign(sig, std::move(poly));
}

const MultiPoly& QuasiPoly::piece(const ParitySignature& sig) const {
  auto it = pieces_.find(sig);
  if (it == pieces_.end()) throw std::out_of_range("QuasiPoly: no piece for signature");
  return it->second;
}

bool QuasiPoly::has_piece(const ParitySignature& sig) const { return pieces_.contains(sig); }

Rational QuasiPoly::eval(std::span<const long> profile) const {
  if (profile.size() != n_) throw std::invalid_argument("QuasiPoly: profile arity mismatch");
  const auto& p = piece(classify(profile));
  std::vector<Rational> pt;
  for (long mu : profile) {
    if (mu != 0) pt.emplace_back(mu);
  }
  return p.eval(pt);
}

std::string to_json(const QuasiPoly& q) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& [sig, poly] : q.pieces()) {
    nlohmann::json parity = nlohmann::json::array();
    for (auto c : sig) parity.push_back(parity_name(c));
    pieces.push_back({{"parity", parity}, {"poly", poly_json(poly)}});
  }
  return nlohmann::json{{"n", q.arity()}, {"pieces", pieces}}.dump();
}

}  // namespace polycount
