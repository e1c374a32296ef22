#pragma once

// The verification suites run by `polycount verify` and by the acceptance
// binary. Each check reports the acceptance criterion it belongs to.

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "polycount/analysis.hpp"
#include "polycount/counts.hpp"

namespace polycount {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// routes, identities, fits, intersections, pullback
const std::vector<std::string>& suite_names();

class Verifier {
 public:
  explicit Verifier(std::shared_ptr<CountCache> cache = std::make_shared<CountCache>(), long pullback_order = 12);

  /// Runs one suite, or every suite for "all". Throws std::invalid_argument
  /// for an unknown name.
  std::vector<CheckResult> run(const std::string& suite);

  std::vector<CheckResult> routes();
  std::vector<CheckResult> identities();
  std::vector<CheckResult> fits();
  std::vector<CheckResult> intersections();
  std::vector<CheckResult> pullback();

  /// The surfaces every structural check covers.
  static const std::vector<SurfaceClass>& surfaces();

 private:
  const FitReport& fit(Family family, int g, int n);

  CountEngine engine_;
  long pullback_order_;
  std::map<std::tuple<Family, int, int>, FitReport> fits_;
};

}  // namespace polycount
