#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "polycount/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no limit
};

const std::vector<Criterion> criteria{
    {1, "closed-form agreement of the P recursion", 10.0},
    {2, "recursion and cuff transform agree", 60.0},
    {3, "spot values", 0.0},
    {4, "Q pieces are odd polynomials of the expected degree", 120.0},
    {5, "structure polynomials F(1,1) and F(0,3)", 0.0},
    {6, "Q top == 2^(4g+2n-5) N top", 0.0},
    {7, "intersection numbers from Q and N agree", 0.0},
    {8, "binomial moment, parity power and convolution identities", 0.0},
    {9, "pullback of the n = 1 generating series", 0.0},
    {10, "counts are symmetric in the profile", 0.0},
};

}  // namespace

int main() {
  polycount::Verifier verifier;
  std::map<int, std::vector<polycount::CheckResult>> by_criterion;
  for (const auto& suite : polycount::suite_names()) {
    for (auto& r : verifier.run(suite)) by_criterion[r.criterion].push_back(std::move(r));
  }

  int failed = 0;
  for (const auto& c : criteria) {
    const auto& checks = by_criterion[c.id];
    double seconds = 0;
    std::size_t passed = 0;
    const polycount::CheckResult* first_failure = nullptr;
    for (const auto& r : checks) {
      seconds += r.seconds;
      if (r.pass) {
        ++passed;
      } else if (!first_failure) {
        first_failure = &r;
      }
    }
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool ok = !checks.empty() && passed == checks.size() && in_time;
    failed += ok ? 0 : 1;

    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << passed << "/"
              << checks.size() << " checks, " << std::fixed << std::setprecision(2) << seconds << " s";
    if (c.limit_seconds > 0) std::cout << " of " << c.limit_seconds << " s";
    std::cout << ")";
    if (first_failure) std::cout << " first failure: " << first_failure->name << ": " << first_failure->detail;
    if (!in_time) std::cout << " over time limit";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
