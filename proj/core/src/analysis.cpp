#include "polycount/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polycount {

namespace {

// Visits every multi-index of a row-major tensor, last axis fastest.
template <class F>
void for_each_index(const std::vector<std::size_t>& shape, F&& f) {
  for (std::size_t s : shape) {
    if (s == 0) return;
  }
  std::vector<std::size_t> idx(shape.size(), 0);
  while (true) {
    f(idx);
    std::size_t k = shape.size();
    bool carried = true;
    while (carried && k > 0) {
      --k;
      if (++idx[k] < shape[k]) {
        carried = false;
      } else {
        idx[k] = 0;
      }
    }
    if (carried) return;
  }
}

std::string profile_text(const Profile& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << ")";
  return os.str();
}

std::string signature_text(const ParitySignature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < sig.size(); ++i) out += (i ? "," : "") + parity_name(sig[i]);
  return out + "]";
}

bool odd_sum(const ParitySignature& sig) {
  std::size_t odd = 0;
  for (auto c : sig) odd += (c == ParityClass::Odd ? 1 : 0);
  return odd % 2 == 1;
}

bool zero_free(const ParitySignature& sig) {
  for (auto c : sig) {
    if (c == ParityClass::Zero) return false;
  }
  return true;
}

Rational family_count(CountEngine& engine, Family family, int g, const Profile& mu) {
  return family == Family::Q ? engine.q_count(g, mu) : engine.n_count(g, mu);
}

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int d = total; d >= 0; --d) {
    cur.push_back(d);
    compositions(total - d, parts, cur, out);
    cur.pop_back();
  }
}

void check_stable(int g, int n, const char* what) {
  if (g < 0 || n < 1) throw std::invalid_argument(std::string(what) + ": need g >= 0 and n >= 1");
  if (!SurfaceClass{g, n}.is_stable()) {
    throw std::invalid_argument(std::string(what) + ": the disc and the annulus are excluded");
  }
}

}  // namespace

int top_degree(int g, int n) { return 6 * g - 6 + 3 * n; }

FitReport fit_quasipoly(Family family, int g, int n, CountEngine& engine) {
  if (family == Family::P) throw std::invalid_argument("fit_quasipoly: family must be Q or N");
  check_stable(g, n, "fit_quasipoly");

  const int D = top_degree(g, n);
  const std::size_t nodes = static_cast<std::size_t>(D) + 1;
  const std::size_t extended = nodes + 2;

  FitReport report;
  report.family = family;
  report.g = g;
  report.n = n;
  report.quasipoly = QuasiPoly(static_cast<std::size_t>(n));

  for (const auto& sig : all_signatures(static_cast<std::size_t>(n))) {
    std::vector<std::size_t> free_vars;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (sig[i] != ParityClass::Zero) free_vars.push_back(i);
    }
    const std::size_t r = free_vars.size();

    // Node t on a free axis is 2t + 1 (odd class) or 2t + 2 (even class).
    auto node = [&](std::size_t axis, std::size_t t) {
      return static_cast<long>(2 * t + (sig[free_vars[axis]] == ParityClass::Odd ? 1 : 2));
    };
    auto profile_at = [&](const std::vector<std::size_t>& idx) {
      Profile mu(sig.size(), 0);
      for (std::size_t a = 0; a < r; ++a) mu[free_vars[a]] = node(a, idx[a]);
      return mu;
    };

    std::vector<std::vector<Rational>> grid(r);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t t = 0; t < nodes; ++t) grid[a].emplace_back(node(a, t));
    }
    Tensor samples{std::vector<std::size_t>(r, nodes), {}};
    for_each_index(samples.shape, [&](const std::vector<std::size_t>& idx) {
      samples.values.push_back(family_count(engine, family, g, profile_at(idx)));
    });
    MultiPoly poly = interpolate(grid, samples);

    for_each_index(std::vector<std::size_t>(r, extended), [&](const std::vector<std::size_t>& idx) {
      bool interior = true;
      for (auto t : idx) interior = interior && t < nodes;
      if (interior) return;
      const Profile mu = profile_at(idx);
      std::vector<long> point;
      for (std::size_t a = 0; a < r; ++a) point.push_back(mu[free_vars[a]]);
      ValidationPoint vp{mu, family_count(engine, family, g, mu), poly.eval_integers(point)};
      if (vp.expected != vp.fitted) {
        report.failures.push_back("validation mismatch at " + profile_text(mu) + ": count " + vp.expected.str() +
                                  ", fitted " + vp.fitted.str());
      }
      report.validation_points.push_back(std::move(vp));
    });

    PieceReport piece;
    piece.signature = sig;
    piece.degree = poly.total_degree();
    piece.odd = is_odd_each_variable(poly);
    if (family == Family::N && odd_sum(sig)) {
      piece.degree_ok = poly.is_zero();
    } else if (r == sig.size()) {
      piece.degree_ok = piece.degree == D;
    } else {
      piece.degree_ok = piece.degree <= D - static_cast<int>(sig.size() - r);
    }
    if (!piece.odd) report.failures.push_back("piece " + signature_text(sig) + " is not odd in each variable");
    if (!piece.degree_ok) {
      report.failures.push_back("piece " + signature_text(sig) + " has degree " + std::to_string(piece.degree));
    }
    report.pieces.push_back(piece);
    report.quasipoly.set_piece(sig, std::move(poly));
  }
  report.pass = report.failures.empty();
  return report;
}

std::string to_json(const FitReport& report) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& piece : report.pieces) {
    nlohmann::json parity = nlohmann::json::array();
    for (auto c : piece.signature) parity.push_back(parity_name(c));
    pieces.push_back({{"parity", parity},
                      {"poly", nlohmann::json::parse(to_json(report.quasipoly.piece(piece.signature)))},
                      {"text", report.quasipoly.piece(piece.signature).to_string()},
                      {"degree", piece.degree},
                      {"odd", piece.odd}});
  }
  nlohmann::json out{{"family", std::string(1, family_letter(report.family))},
                     {"g", report.g},
                     {"n", report.n},
                     {"pieces", pieces},
                     {"validation_points", report.validation_points.size()},
                     {"failures", report.failures},
                     {"pass", report.pass}};
  return out.dump();
}

MultiPoly structure_polynomial(int g, int n, long max_validate, CountEngine& engine) {
  check_stable(g, n, "structure_polynomial");
  const long a = 3L * g - 3 + n;

  auto residue = [&](const Profile& mu) {
    Rational r = engine.p_recursive(g, mu);
    for (long m : mu) r = r * odd_falling(m, a) / binomial(2 * m - 1, m);
    return r;
  };

  // Nodes are positive integers where the falling product does not vanish.
  const std::size_t per_axis = static_cast<std::size_t>(2 * a + 4);
  std::vector<long> axis_nodes;
  for (long m = 1; axis_nodes.size() < per_axis; ++m) {
    if (!odd_falling(m, a).is_zero()) axis_nodes.push_back(m);
  }
  const std::size_t nv = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> grid(nv);
  for (auto& axis : grid) {
    for (long m : axis_nodes) axis.emplace_back(m);
  }
  Tensor samples{std::vector<std::size_t>(nv, per_axis), {}};
  for_each_index(samples.shape, [&](const std::vector<std::size_t>& idx) {
    Profile mu;
    for (auto t : idx) mu.push_back(axis_nodes[t]);
    samples.values.push_back(residue(mu));
  });
  MultiPoly F = interpolate(grid, samples);

  const std::size_t span = max_validate > 0 ? static_cast<std::size_t>(max_validate) : 0;
  for_each_index(std::vector<std::size_t>(nv, span), [&](const std::vector<std::size_t>& idx) {
    Profile mu;
    for (auto t : idx) mu.push_back(static_cast<long>(t) + 1);
    const Rational expected = residue(mu);
    const Rational fitted = F.eval_integers(mu);
    if (expected != fitted) {
      throw ContractError("structure_polynomial: residue is not polynomial at " + profile_text(mu) + " (" +
                          expected.str() + " vs " + fitted.str() + ")");
    }
  });
  return F;
}

IntersectionTable intersection_numbers(const FitReport& fit) {
  if (!fit.pass) throw ContractError("intersection_numbers: the fit did not pass");
  IntersectionTable table;
  table.g = fit.g;
  table.n = fit.n;
  const int total = 3 * fit.g - 3 + fit.n;
  std::vector<std::vector<int>> ds;
  std::vector<int> cur;
  compositions(total, static_cast<std::size_t>(fit.n), cur, ds);

  const Rational scale = fit.family == Family::Q ? pow2(fit.g - 1) : pow2(5L * fit.g - 6 + 2L * fit.n);
  for (const auto& d : ds) {
    Exponents exps;
    for (int di : d) exps.push_back(2 * di + 1);
    std::optional<Rational> top;
    for (const auto& [sig, poly] : fit.quasipoly.pieces()) {
      if (!zero_free(sig)) continue;
      if (fit.family == Family::N && odd_sum(sig)) continue;
      const Rational c = poly.coefficient(exps);
      if (top && *top != c) {
        throw ContractError("intersection_numbers: parity pieces disagree on the top coefficient at " +
                            signature_text(sig));
      }
      top = c;
    }
    Rational value = top.value_or(Rational(0)) * scale;
    for (int di : d) value *= factorial(di);
    table.entries.emplace(d, value);
  }
  return table;
}

IntersectionTable intersection_numbers(int g, int n, Family source, CountEngine& engine) {
  return intersection_numbers(fit_quasipoly(source, g, n, engine));
}

std::string to_json(const IntersectionTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, value] : table.entries) {
    out.push_back({{"g", table.g}, {"n", table.n}, {"d", d}, {"value", value.str()}});
  }
  return out.dump();
}

std::string to_text(const IntersectionTable& table) {
  std::ostringstream os;
  for (const auto& [d, value] : table.entries) {
    os << "(" << table.g << "," << table.n << ") d=(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "): " << value << "\n";
  }
  return os.str();
}

TopRatioReport qn_top_check(const FitReport& q_fit, const FitReport& n_fit) {
  if (q_fit.family != Family::Q || n_fit.family != Family::N || q_fit.g != n_fit.g || q_fit.n != n_fit.n) {
    throw std::invalid_argument("qn_top_check: need a Q fit and an N fit of the same surface");
  }
  TopRatioReport report;
  report.g = q_fit.g;
  report.n = q_fit.n;
  report.factor = pow2(4L * q_fit.g + 2L * q_fit.n - 5);
  for (const auto& [sig, qpoly] : q_fit.quasipoly.pieces()) {
    if (!zero_free(sig) || odd_sum(sig)) continue;
    const MultiPoly q_top = qpoly.top_component();
    const MultiPoly n_top = n_fit.quasipoly.piece(sig).top_component();
    if (q_top != report.factor * n_top) {
      report.diffs.push_back(signature_text(sig) + ": Q top " + q_top.to_string() + " vs " + report.factor.str() +
                             " * (" + n_top.to_string() + ")");
    }
  }
  report.pass = report.diffs.empty();
  return report;
}

TopRatioReport qn_top_check(int g, int n, CountEngine& engine) {
  return qn_top_check(fit_quasipoly(Family::Q, g, n, engine), fit_quasipoly(Family::N, g, n, engine));
}

PullbackReport pullback_check(long order, CountEngine& engine) {
  if (order < 4) throw std::invalid_argument("pullback_check: order must be at least 4");
  const long K = order;
  auto primed = [](Rational v, long mu) { return mu == 0 ? v / Rational(2) : v; };

  // x^(-mu-1) dx/dz = z^(mu-1) (z - 1) (1 + z)^(-2mu-1)
  LaurentSeries z_minus_one(0, K);
  z_minus_one.add_to(0, Rational(-1));
  z_minus_one.add_to(1, Rational(1));
  LaurentSeries total(-1, K - 1);
  for (long mu = 0; mu <= K; ++mu) {
    const Rational p = primed(engine.p_recursive(1, {mu}), mu);
    total += LaurentSeries::monomial(mu - 1, p, K - 1) * z_minus_one * LaurentSeries::one_plus_z_pow(-2 * mu - 1, K);
  }

  PullbackReport report;
  report.order = K;
  report.series = total.to_string();
  const Rational q0 = primed(engine.q_count(1, {0}), 0);
  const Rational c0 = total.coefficient(-1);
  if (!q0.is_zero()) {
    if (c0 == q0) report.epsilon = 1;
    if (c0 == -q0) report.epsilon = -1;
  }
  bool all = report.epsilon != 0;
  for (long nu = 0; nu <= K; ++nu) {
    PullbackReport::Term term;
    term.nu = nu;
    term.pullback = total.coefficient(nu - 1);
    term.q_primed = primed(engine.q_count(1, {nu}), nu);
    term.match = report.epsilon != 0 && term.pullback == Rational(report.epsilon) * term.q_primed;
    all = all && term.match;
    report.terms.push_back(term);
  }
  report.pass = all;
  return report;
}

}  // namespace polycount
