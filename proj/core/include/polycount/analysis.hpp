#pragma once

// Structural checks on the counts: parity-stratified polynomial fits, the
// denominator-cleared structure polynomial of P, leading coefficients as
// psi-class intersection numbers, and the n = 1 generating-series pullback.

#include <map>
#include <string>
#include <vector>

#include "polycount/counts.hpp"
#include "polycount/laurent.hpp"
#include "polycount/polynomial.hpp"

namespace polycount {

/// 6g - 6 + 3n
int top_degree(int g, int n);

struct ValidationPoint {
  Profile profile;
  Rational expected;
  Rational fitted;
};

struct PieceReport {
  ParitySignature signature;
  int degree = -1;
  bool odd = false;
  bool degree_ok = false;
};

struct FitReport {
  Family family = Family::Q;
  int g = 0;
  int n = 0;
  QuasiPoly quasipoly;
  std::vector<PieceReport> pieces;  // sorted by signature
  std::vector<ValidationPoint> validation_points;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Fits Q or N on every parity signature. Non-Zero variables are sampled on
/// D + 1 nodes of the right parity (D = 6g - 6 + 3n) and validated on the
/// two next nodes of each axis. Never throws on a mismatch: the offending
/// profile is recorded in `failures` and `pass` is false.
/// Throws std::invalid_argument for P, or for the disc and annulus.
FitReport fit_quasipoly(Family family, int g, int n, CountEngine& engine = default_engine());

std::string to_json(const FitReport& report);

/// Samples P(mu) * prod odd_falling(mu_i, a) / prod binom(2mu_i - 1, mu_i)
/// (a = 3g - 3 + n) on a positive tensor grid, interpolates, and checks every
/// point of [1, max_validate]^n. Throws ContractError on any mismatch.
MultiPoly structure_polynomial(int g, int n, long max_validate, CountEngine& engine = default_engine());

/// psi-class intersection numbers keyed by the exponent vector d.
struct IntersectionTable {
  int g = 0;
  int n = 0;
  std::map<std::vector<int>, Rational> entries;
};

/// Reads the top coefficients from a passing fit and inverts the leading-term
/// formula for its family. Throws ContractError if the fit failed or if two
/// parity pieces disagree on a top coefficient.
IntersectionTable intersection_numbers(const FitReport& fit);
IntersectionTable intersection_numbers(int g, int n, Family source, CountEngine& engine = default_engine());

std::string to_json(const IntersectionTable& table);
std::string to_text(const IntersectionTable& table);

struct TopRatioReport {
  int g = 0;
  int n = 0;
  Rational factor;  // 2^(4g + 2n - 5)
  std::vector<std::string> diffs;
  bool pass = false;
};

/// Compares the top-degree components of the Q and N fits on every zero-free
/// signature where N does not vanish by parity.
TopRatioReport qn_top_check(const FitReport& q_fit, const FitReport& n_fit);
TopRatioReport qn_top_check(int g, int n, CountEngine& engine = default_engine());

struct PullbackReport {
  long order = 0;
  int epsilon = 0;  // 0 when no single sign works
  struct Term {
    long nu = 0;
    Rational pullback;  // coefficient of z^(nu - 1)
    Rational q_primed;
    bool match = false;
  };
  std::vector<Term> terms;
  bool pass = false;
  std::string series;
};

/// Expands sum_{mu <= K} P'_{1,1}(mu) x^(-mu-1) dx under x = (1 + z)^2 / z and
/// compares the z^(nu-1) coefficients with Q'_{1,1}(nu), nu = 0..K, up to a
/// single global sign. Requires K >= 4.
PullbackReport pullback_check(long order, CountEngine& engine = default_engine());

}  // namespace polycount
