#include "polycount_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polycount/analysis.hpp"
#include "polycount/counts.hpp"
#include "polycount/verify.hpp"

namespace polycount::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string family;
  int g = 0;
  int n = -1;
  std::vector<long> profile;
  long max = -1;
  std::string route = "recursive";
  std::string format;
  std::string cache;
  std::vector<std::string> suites;
  long order = 12;
  bool structure = false;
};

Family family_of(const Invocation& inv) {
  const auto f = parse_family(inv.family);
  if (!f) throw UsageError("unknown family '" + inv.family + "' (expected p, q or n)");
  return *f;
}

void check_surface(int g, int n) {
  if (g < 0) throw UsageError("genus must be non-negative");
  if (n < 1) throw UsageError("need at least one boundary component");
}

void check_stable(int g, int n, const std::string& what) {
  check_surface(g, n);
  if (!SurfaceClass{g, n}.is_stable()) throw UsageError(what + " excludes the disc (0,1) and the annulus (0,2)");
}

Rational evaluate(CountEngine& engine, Family f, int g, int n, const Profile& mu, const std::string& route) {
  if (route == "recursive") {
    switch (f) {
      case Family::P: return engine.p_recursive(g, mu);
      case Family::Q: return engine.q_count(g, mu);
      case Family::N:
        if (!SurfaceClass{g, n}.is_stable() && !all_zero(mu)) {
          throw UsageError("N is not defined on the disc or the annulus");
        }
        return engine.n_count(g, mu);
    }
  }
  if (route == "transform") {
    if (f != Family::P) throw UsageError("the transform route computes P only");
    check_stable(g, n, "the transform route");
    return engine.p_from_q(g, mu);
  }
  if (route == "closed") {
    std::optional<Rational> v;
    switch (f) {
      case Family::P: v = p_closed(g, n, mu); break;
      case Family::Q: v = q_base(g, n, mu, true); break;
      case Family::N: v = n_base(g, n, mu); break;
    }
    if (!v) throw UsageError("no closed form for this family and surface");
    return *v;
  }
  throw UsageError("unknown route '" + route + "'");
}

std::string join(const Profile& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s;
}

std::string csv_header(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += "mu" + std::to_string(i) + ",";
  return s + "value";
}

class Session {
 public:
  explicit Session(const Invocation& inv) : inv_(inv), cache_(std::make_shared<CountCache>()) {
    if (!inv_.cache.empty() && std::filesystem::exists(inv_.cache)) cache_->load_file(inv_.cache);
  }
  void persist() const {
    if (!inv_.cache.empty()) cache_->save_file(inv_.cache);
  }
  const std::shared_ptr<CountCache>& cache() const { return cache_; }

 private:
  const Invocation& inv_;
  std::shared_ptr<CountCache> cache_;
};

int cmd_count(const Invocation& inv, std::ostream& out) {
  const Family f = family_of(inv);
  const int n = inv.n < 0 ? static_cast<int>(inv.profile.size()) : inv.n;
  check_surface(inv.g, n);
  check_arguments(inv.g, n, inv.profile);
  Session session(inv);
  CountEngine engine(session.cache());
  const Rational v = evaluate(engine, f, inv.g, n, inv.profile, inv.route);
  const std::string format = inv.format.empty() ? "text" : inv.format;
  if (format == "json") {
    out << nlohmann::json{{"family", std::string(1, family_letter(f))},
                          {"g", inv.g},
                          {"n", n},
                          {"profile", inv.profile},
                          {"value", v.str()}}
               .dump()
        << "\n";
  } else if (format == "csv") {
    out << csv_header(n) << "\n" << join(inv.profile) << "," << v << "\n";
  } else {
    out << v << "\n";
  }
  session.persist();
  return 0;
}

int cmd_table(const Invocation& inv, std::ostream& out) {
  const Family f = family_of(inv);
  check_surface(inv.g, inv.n);
  if (inv.max < 0) throw UsageError("--max must be given and non-negative");
  Session session(inv);
  CountEngine engine(session.cache());

  std::vector<std::pair<Profile, Rational>> rows;
  Profile mu(static_cast<std::size_t>(inv.n), 0);
  while (true) {
    rows.emplace_back(mu, evaluate(engine, f, inv.g, inv.n, mu, inv.route));
    std::size_t k = mu.size();
    while (k > 0 && mu[k - 1] == inv.max) mu[--k] = 0;
    if (k == 0) break;
    ++mu[k - 1];
  }

  const std::string format = inv.format.empty() ? "csv" : inv.format;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, v] : rows) arr.push_back({{"profile", p}, {"value", v.str()}});
    out << arr.dump() << "\n";
  } else {
    out << csv_header(inv.n) << "\n";
    for (const auto& [p, v] : rows) out << join(p) << "," << v << "\n";
  }
  session.persist();
  return 0;
}

int cmd_fit(const Invocation& inv, std::ostream& out) {
  const Family f = family_of(inv);
  if (f == Family::P) throw UsageError("fit applies to Q and N (use --structure for P)");
  check_stable(inv.g, inv.n, "fit");
  Session session(inv);
  CountEngine engine(session.cache());
  const FitReport report = fit_quasipoly(f, inv.g, inv.n, engine);

  const std::string format = inv.format.empty() ? "json" : inv.format;
  if (format == "text") {
    out << family_letter(f) << "(" << inv.g << "," << inv.n << ") " << (report.pass ? "pass" : "FAIL") << "\n";
    for (const auto& piece : report.pieces) {
      out << "  [";
      for (std::size_t i = 0; i < piece.signature.size(); ++i) out << (i ? "," : "") << parity_name(piece.signature[i]);
      out << "] " << report.quasipoly.piece(piece.signature).to_string() << "\n";
    }
    for (const auto& failure : report.failures) out << "  " << failure << "\n";
  } else {
    out << to_json(report) << "\n";
  }
  if (inv.structure) {
    const long validate = inv.max > 0 ? inv.max : 6L * inv.g + 2L * inv.n;
    const MultiPoly F = structure_polynomial(inv.g, inv.n, validate, engine);
    if (format == "text") {
      out << "F(" << inv.g << "," << inv.n << ") = " << F.to_string() << "\n";
    } else {
      out << nlohmann::json{{"structure", nlohmann::json::parse(to_json(F))}, {"text", F.to_string()}}.dump() << "\n";
    }
  }
  session.persist();
  return report.pass ? 0 : 1;
}

int cmd_intersect(const Invocation& inv, std::ostream& out) {
  const Family f = inv.family.empty() ? Family::Q : family_of(inv);
  if (f == Family::P) throw UsageError("intersection numbers are read from Q or N");
  check_stable(inv.g, inv.n, "intersect");
  Session session(inv);
  CountEngine engine(session.cache());
  const IntersectionTable table = intersection_numbers(inv.g, inv.n, f, engine);
  const std::string format = inv.format.empty() ? "text" : inv.format;
  if (format == "json") {
    out << to_json(table) << "\n";
  } else if (format == "csv") {
    out << "g,n,d,value\n";
    for (const auto& [d, v] : table.entries) {
      out << inv.g << "," << inv.n << ",";
      for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
      out << "," << v << "\n";
    }
  } else {
    out << to_text(table);
  }
  session.persist();
  return 0;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  if (inv.order < 4) throw UsageError("--order must be at least 4");
  std::vector<std::string> suites = inv.suites.empty() ? std::vector<std::string>{"all"} : inv.suites;
  Session session(inv);
  Verifier verifier(session.cache(), inv.order);

  std::vector<CheckResult> results;
  for (const auto& s : suites) {
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
    auto part = verifier.run(s);
    results.insert(results.end(), part.begin(), part.end());
  }

  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << " (" << secs.str() << " s)";
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
  out << passed << "/" << results.size() << " checks passed\n";
  session.persist();
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact counts of polygon and arc diagrams on bordered surfaces"};
  app.name("polycount");
  app.require_subcommand(1);

  auto add_family = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--family", inv.family, "p, q or n");
    if (required) opt->required();
  };
  auto add_surface = [&](CLI::App* sub, bool n_required) {
    sub->add_option("-g,--genus", inv.g, "genus")->required();
    auto* opt = sub->add_option("-n,--boundaries", inv.n, "number of boundary components");
    if (n_required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", inv.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache", inv.cache, "count cache file, read before and written after the command");
  };

  auto* count = app.add_subcommand("count", "print one count");
  add_family(count, true);
  add_surface(count, false);
  count->add_option("--profile", inv.profile, "boundary vertex counts, e.g. 2,1,1")->delimiter(',')->required();
  count->add_option("--route", inv.route, "closed, recursive or transform")
      ->check(CLI::IsMember({"closed", "recursive", "transform"}));
  add_common(count);

  auto* table = app.add_subcommand("table", "print every count with all entries at most --max");
  add_family(table, true);
  add_surface(table, true);
  table->add_option("--max", inv.max, "largest entry")->required();
  table->add_option("--route", inv.route, "closed, recursive or transform")
      ->check(CLI::IsMember({"closed", "recursive", "transform"}));
  add_common(table);

  auto* fit = app.add_subcommand("fit", "fit Q or N as an odd quasi-polynomial");
  add_family(fit, true);
  add_surface(fit, true);
  fit->add_flag("--structure", inv.structure, "also extract the structure polynomial of P");
  fit->add_option("--max", inv.max, "validation range for --structure");
  add_common(fit);

  auto* intersect = app.add_subcommand("intersect", "psi-class intersection numbers from top coefficients");
  add_family(intersect, false);
  add_surface(intersect, true);
  add_common(intersect);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", inv.suites, "routes, identities, fits, intersections, pullback or all");
  verify->add_option("--order", inv.order, "truncation order of the pullback check");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return 0;
    }
    err << "polycount: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*count) return cmd_count(inv, out);
    if (*table) return cmd_table(inv, out);
    if (*fit) return cmd_fit(inv, out);
    if (*intersect) return cmd_intersect(inv, out);
    if (*verify) return cmd_verify(inv, out);
  } catch (const UsageError& e) {
    err << "polycount: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "polycount: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "polycount: contract violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "polycount: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace polycount::cli
