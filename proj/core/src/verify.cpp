#include "polycount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polycount/identities.hpp"

namespace polycount {

namespace {

using Outcome = std::pair<bool, std::string>;

CheckResult timed(int criterion, std::string name, const std::function<Outcome()>& body) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string text(const Profile& mu) {
  std::ostringstream os;
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  return os.str();
}

std::string surface_text(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

// Every profile of length n with entries in [0, max].
std::vector<Profile> box(int n, long max) {
  std::vector<Profile> out;
  Profile mu(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(mu);
    std::size_t k = mu.size();
    while (k > 0 && mu[k - 1] == max) mu[--k] = 0;
    if (k == 0) return out;
    ++mu[k - 1];
  }
}

// Every profile of length n with entry sum at most s.
std::vector<Profile> simplex(int n, long s) {
  std::vector<Profile> out;
  for (auto& mu : box(n, s)) {
    long t = 0;
    for (long m : mu) t += m;
    if (t <= s) out.push_back(std::move(mu));
  }
  return out;
}

Outcome closed_agreement(CountEngine& engine, int g, int n, long max, bool transform) {
  std::size_t checked = 0;
  for (const auto& mu : box(n, max)) {
    const Rational rec = engine.p_recursive(g, mu);
    const auto closed = p_closed(g, n, mu);
    if (!closed || *closed != rec) {
      return {false, "mismatch at (" + text(mu) + "): recursive " + rec.str() + ", closed " +
                         (closed ? closed->str() : "absent")};
    }
    if (transform) {
      const Rational tr = engine.p_from_q(g, mu);
      if (tr != rec) return {false, "mismatch at (" + text(mu) + "): recursive " + rec.str() + ", transform " + tr.str()};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " profiles"};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"routes", "identities", "fits", "intersections", "pullback"};
  return names;
}

const std::vector<SurfaceClass>& Verifier::surfaces() {
  static const std::vector<SurfaceClass> s{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}};
  return s;
}

Verifier::Verifier(std::shared_ptr<CountCache> cache, long pullback_order)
    : engine_(std::move(cache)), pullback_order_(pullback_order) {}

std::vector<CheckResult> Verifier::run(const std::string& suite) {
  if (suite == "routes") return routes();
  if (suite == "identities") return identities();
  if (suite == "fits") return fits();
  if (suite == "intersections") return intersections();
  if (suite == "pullback") return pullback();
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      auto part = run(name);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

const FitReport& Verifier::fit(Family family, int g, int n) {
  const auto key = std::make_tuple(family, g, n);
  auto it = fits_.find(key);
  if (it == fits_.end()) it = fits_.emplace(key, fit_quasipoly(family, g, n, engine_)).first;
  return it->second;
}

std::vector<CheckResult> Verifier::routes() {
  std::vector<CheckResult> out;
  out.push_back(timed(1, "P(0,1;μ≤16): recursive == closed", [&] { return closed_agreement(engine_, 0, 1, 16, false); }));
  out.push_back(timed(1, "P(0,2;μ≤10): recursive == closed", [&] { return closed_agreement(engine_, 0, 2, 10, false); }));
  out.push_back(timed(1, "P(0,3;μ≤8): recursive == transform == closed",
                      [&] { return closed_agreement(engine_, 0, 3, 8, true); }));
  out.push_back(timed(1, "P(1,1;μ≤16): recursive == transform == closed",
                      [&] { return closed_agreement(engine_, 1, 1, 16, true); }));

  for (const auto& s : surfaces()) {
    out.push_back(timed(2, "P" + surface_text(s.g, s.n).insert(surface_text(s.g, s.n).size() - 1, ";μ≤6") +
                               ": recursive == transform",
                        [&, s]() -> Outcome {
                          std::size_t checked = 0;
                          for (const auto& mu : box(s.n, 6)) {
                            const Rational rec = engine_.p_recursive(s.g, mu);
                            const Rational tr = engine_.p_from_q(s.g, mu);
                            if (rec != tr) {
                              return {false, "mismatch at (" + text(mu) + "): " + rec.str() + " vs " + tr.str()};
                            }
                            ++checked;
                          }
                          return {true, std::to_string(checked) + " profiles"};
                        }));
  }

  out.push_back(timed(3, "spot values", [&]() -> Outcome {
    struct Spot {
      std::string label;
      std::function<Rational()> value;
      long expected;
    };
    const std::vector<Spot> spots{
        {"P_{0,1}(3)", [&] { return engine_.p_recursive(0, {3}); }, 5},
        {"P_{0,1}(3) closed", [&] { return *p_closed(0, 1, {3}); }, 5},
        {"P_{0,2}(1,1)", [&] { return engine_.p_recursive(0, {1, 1}); }, 2},
        {"P_{1,1}(2)", [&] { return engine_.p_recursive(1, {2}); }, 4},
        {"P_{1,1}(2) transform", [&] { return engine_.p_from_q(1, {2}); }, 4},
        {"P_{1,1}(3)", [&] { return engine_.p_recursive(1, {3}); }, 17},
        {"P_{1,1}(3) transform", [&] { return engine_.p_from_q(1, {3}); }, 17},
        {"P_{0,3}(1,1,1)", [&] { return engine_.p_recursive(0, {1, 1, 1}); }, 6},
        {"P_{0,3}(2,1,1) transform", [&] { return engine_.p_from_q(0, {2, 1, 1}); }, 32},
        {"P_{0,3}(2,1,1)", [&] { return engine_.p_recursive(0, {2, 1, 1}); }, 32},
        {"Q_{1,1}(4)", [&] { return engine_.q_count(1, {4}); }, 4},
        {"Q_{1,2}(1,1)", [&] { return engine_.q_count(1, {1, 1}); }, 1},
        {"N_{1,2}(1,1)", [&] { return engine_.n_count(1, {1, 1}); }, 1},
        {"L(2,0)", [] { return cuff_count(2, 0); }, 3},
        {"L(3,1)", [] { return cuff_count(3, 1); }, 15},
    };
    for (const auto& s : spots) {
      const Rational v = s.value();
      if (v != Rational(s.expected)) {
        return {false, s.label + " = " + v.str() + ", expected " + std::to_string(s.expected)};
      }
    }
    return {true, std::to_string(spots.size()) + " values"};
  }));

  out.push_back(timed(10, "symmetry under permutation (Σμ≤8, 2g-2+n≤2)", [&]() -> Outcome {
    // A separate engine that keeps profile order and pivots on the first
    // positive entry, so no value is shared between orderings via sorting.
    CountEngine ordered(std::make_shared<CountCache>(), CountEngine::Pivot::FirstPositive);
    std::size_t checked = 0;
    for (Family f : {Family::P, Family::Q, Family::N}) {
      for (int g = 0; g <= 2; ++g) {
        for (int n = 1; 2 * g - 2 + n <= 2; ++n) {
          if (f == Family::N && !SurfaceClass{g, n}.is_stable()) continue;
          auto value = [&](const Profile& mu) {
            switch (f) {
              case Family::P: return ordered.p_recursive(g, mu);
              case Family::Q: return ordered.q_count(g, mu);
              case Family::N: return ordered.n_count(g, mu);
            }
            return Rational(0);
          };
          for (const auto& mu : simplex(n, 8)) {
            Profile sorted = mu;
            std::sort(sorted.begin(), sorted.end());
            const Rational base = value(sorted);
            if (value(mu) != base) {
              return {false, std::string(1, family_letter(f)) + surface_text(g, n) + " differs at (" + text(mu) +
                                 ") vs (" + text(sorted) + ")"};
            }
            ++checked;
          }
        }
      }
    }
    return {true, std::to_string(checked) + " ordered profiles"};
  }));
  return out;
}

std::vector<CheckResult> Verifier::identities() {
  std::vector<CheckResult> out;
  out.push_back(timed(8, "moment sums: closed == direct (α≤3, n≤25)", []() -> Outcome {
    for (long alpha = 0; alpha <= 3; ++alpha) {
      const MomentPolyPair pair = moment_poly(alpha);
      for (long n = 1; n <= 25; ++n) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
          if (moment_sum_closed(n, alpha, p, pair) != moment_sum_direct(n, alpha, p)) {
            return {false, "mismatch at α=" + std::to_string(alpha) + ", n=" + std::to_string(n)};
          }
        }
      }
    }
    return {true, "P_1(n) = " + moment_poly(1).p_alpha.to_string()};
  }));

  out.push_back(timed(8, "moment sums: (n²-1)²n² in place of P_1 is rejected", []() -> Outcome {
    MomentPolyPair wrong = moment_poly(1);
    const MultiPoly x = MultiPoly::variable(1, 0);
    const MultiPoly u = x * x - MultiPoly::constant(1, Rational(1));
    wrong.p_alpha = u * u * x * x;
    for (long n = 1; n <= 25; ++n) {
      if (moment_sum_closed(n, 1, Parity::Even, wrong) != moment_sum_direct(n, 1, Parity::Even)) {
        return {true, "first mismatch at n=" + std::to_string(n)};
      }
    }
    return {false, "substituted polynomial was not detected"};
  }));

  out.push_back(timed(8, "parity power sums: closed == direct (k≤6, n≤40)", []() -> Outcome {
    for (long k = 0; k <= 6; ++k) {
      for (long n = 0; n <= 40; ++n) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
          if (power_sum_parity(k, n, p) != power_sum_parity_direct(k, n, p)) {
            return {false, "mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n)};
          }
        }
      }
    }
    return {true, "both parities"};
  }));

  out.push_back(timed(8, "parity convolutions: odd, exact degree, parity-free leading term (odd k≤5, m≤3)", []() -> Outcome {
    std::size_t fits = 0;
    for (std::size_t m = 2; m <= 3; ++m) {
      for (const auto& kv : box(static_cast<int>(m), 5)) {
        if (std::any_of(kv.begin(), kv.end(), [](long k) { return k % 2 == 0; })) continue;
        std::optional<Rational> leading;
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
          std::vector<Parity> parities;
          for (std::size_t t = 0; t < m; ++t) parities.push_back((mask >> t) & 1 ? Parity::Odd : Parity::Even);
          const ConvolutionFit fit = conv_parity_fit(kv, parities);
          if (!fit.pass()) return {false, "fit failed for k=(" + text(kv) + ")"};
          if (leading && *leading != fit.leading) return {false, "leading term depends on parity for k=(" + text(kv) + ")"};
          leading = fit.leading;
          ++fits;
        }
      }
    }
    return {true, std::to_string(fits) + " fits"};
  }));
  return out;
}

std::vector<CheckResult> Verifier::fits() {
  std::vector<CheckResult> out;
  for (const auto& s : surfaces()) {
    out.push_back(timed(4, "Q" + surface_text(s.g, s.n) + " odd quasi-polynomial of degree " +
                               std::to_string(top_degree(s.g, s.n)),
                        [&, s]() -> Outcome {
                          const FitReport& r = fit(Family::Q, s.g, s.n);
                          if (!r.pass) return {false, r.failures.front()};
                          return {true, std::to_string(r.validation_points.size()) + " validation points"};
                        }));
  }

  out.push_back(timed(4, "Q(1,1) pieces equal (μ³-μ)/24 and (μ³+8μ)/24", [&]() -> Outcome {
    const FitReport& r = fit(Family::Q, 1, 1);
    const Rational c(1, 24);
    MultiPoly odd(1), even(1);
    odd.add_term({3}, c);
    odd.add_term({1}, -c);
    even.add_term({3}, c);
    even.add_term({1}, Rational(8) * c);
    const bool ok = r.quasipoly.piece({ParityClass::Odd}) == odd && r.quasipoly.piece({ParityClass::EvenPositive}) == even;
    return {ok, "odd " + r.quasipoly.piece({ParityClass::Odd}).to_string() + "; even " +
                    r.quasipoly.piece({ParityClass::EvenPositive}).to_string()};
  }));

  out.push_back(timed(4, "Q(0,3) zero-free pieces equal 2μ1μ2μ3", [&]() -> Outcome {
    const FitReport& r = fit(Family::Q, 0, 3);
    const MultiPoly expected = MultiPoly::monomial({1, 1, 1}, Rational(2));
    for (const auto& [sig, poly] : r.quasipoly.pieces()) {
      if (std::find(sig.begin(), sig.end(), ParityClass::Zero) != sig.end()) continue;
      if (poly != expected) return {false, "piece differs: " + poly.to_string()};
    }
    return {true, "8 pieces"};
  }));

  out.push_back(timed(5, "F(1,1) = (2μ-3)(μ³+3μ²+20μ-12)/12", [&]() -> Outcome {
    const MultiPoly F = structure_polynomial(1, 1, 16, engine_);
    const std::vector<Rational> lin{Rational(-3), Rational(2)};
    const MultiPoly q = divide_exact(F, MultiPoly::univariate(lin));
    const std::vector<Rational> cub{Rational(-1), Rational(5, 3), Rational(1, 4), Rational(1, 12)};
    const bool ok = q == MultiPoly::univariate(cub);
    return {ok, "F = " + F.to_string() + "; quotient " + q.to_string()};
  }));

  out.push_back(timed(5, "F(0,3) extracts exactly (validated μ≤8)", [&]() -> Outcome {
    const MultiPoly F = structure_polynomial(0, 3, 8, engine_);
    for (const auto& mu : box(3, 8)) {
      if (std::find(mu.begin(), mu.end(), 0L) != mu.end()) continue;
      Rational closed = *p_closed(0, 3, mu);
      for (long m : mu) closed = closed * odd_falling(m, 0) / binomial(2 * m - 1, m);
      if (closed != F.eval_integers(mu)) return {false, "closed form differs at (" + text(mu) + ")"};
    }
    return {true, "F = " + F.to_string()};
  }));
  return out;
}

std::vector<CheckResult> Verifier::intersections() {
  std::vector<CheckResult> out;
  for (const auto& s : surfaces()) {
    out.push_back(timed(6, "Q top == 2^(4g+2n-5) N top on " + surface_text(s.g, s.n), [&, s]() -> Outcome {
      const TopRatioReport r = qn_top_check(fit(Family::Q, s.g, s.n), fit(Family::N, s.g, s.n));
      if (!r.pass) return {false, r.diffs.front()};
      return {true, "factor " + r.factor.str()};
    }));
  }
  out.push_back(timed(6, "(1,1) literal ratio (1/24)/(1/48) = 2", [&]() -> Outcome {
    const Rational q = fit(Family::Q, 1, 1).quasipoly.piece({ParityClass::Odd}).coefficient({3});
    const Rational n = fit(Family::N, 1, 1).quasipoly.piece({ParityClass::EvenPositive}).coefficient({3});
    const bool ok = q == Rational(1, 24) && n == Rational(1, 48) && q / n == Rational(2);
    return {ok, q.str() + " / " + n.str()};
  }));

  for (const auto& s : surfaces()) {
    out.push_back(timed(7, "intersection numbers " + surface_text(s.g, s.n) + ": Q source == N source",
                        [&, s]() -> Outcome {
                          const IntersectionTable q = intersection_numbers(fit(Family::Q, s.g, s.n));
                          const IntersectionTable n = intersection_numbers(fit(Family::N, s.g, s.n));
                          if (q.entries != n.entries) return {false, "tables differ:\n" + to_text(q) + to_text(n)};
                          std::string values;
                          for (const auto& [d, v] : q.entries) {
                            if (v.sign() <= 0) return {false, "non-positive entry " + v.str()};
                            values += (values.empty() ? "" : ", ") + v.str();
                          }
                          return {true, surface_text(s.g, s.n) + ": " + values};
                        }));
  }
  out.push_back(timed(7, "forced entries (0,3) -> 1 and (1,1) -> 1/24", [&]() -> Outcome {
    const IntersectionTable a = intersection_numbers(fit(Family::Q, 0, 3));
    const IntersectionTable b = intersection_numbers(fit(Family::Q, 1, 1));
    const Rational va = a.entries.at({0, 0, 0});
    const Rational vb = b.entries.at({1});
    return {va == Rational(1) && vb == Rational(1, 24), "(0,3): " + va.str() + "; (1,1): " + vb.str()};
  }));
  return out;
}

std::vector<CheckResult> Verifier::pullback() {
  std::vector<CheckResult> out;
  const long K = pullback_order_;
  out.push_back(timed(9, "pullback of P'(1,1) against Q'(1,1) to order " + std::to_string(K), [&]() -> Outcome {
    const PullbackReport r = pullback_check(K, engine_);
    if (!r.pass) {
      for (const auto& t : r.terms) {
        if (!t.match) {
          return {false, "ε=" + std::to_string(r.epsilon) + ", order " + std::to_string(t.nu) + ": " + t.pullback.str() +
                             " vs " + t.q_primed.str()};
        }
      }
      return {false, "no global sign"};
    }
    return {true, std::string("ε=") + (r.epsilon < 0 ? "−1" : "+1") + ", orders 0.." + std::to_string(K) + " match"};
  }));
  return out;
}

}  // namespace polycount
