#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polycount_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polycount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = polycount::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, values;
  std::getline(in, line);
  while (std::getline(in, line)) values += (values.empty() ? "" : ",") + line.substr(line.rfind(',') + 1);
  return values;
}

}  // namespace

TEST(Cli, CountExamples) {
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "-n", "1", "--profile", "4"}).out, "4\n");
  EXPECT_EQ(cli({"count", "--family", "p", "-g", "0", "-n", "3", "--profile", "2,1,1"}).out, "32\n");
  EXPECT_EQ(cli({"count", "--family", "p", "-g", "0", "-n", "3", "--profile", "2,1,1", "--route", "transform"}).out,
            "32\n");
  EXPECT_EQ(cli({"count", "--family", "p", "-g", "0", "-n", "1", "--profile", "3"}).out, "5\n");
  EXPECT_EQ(cli({"count", "--family", "p", "-g", "0", "-n", "1", "--profile", "3", "--route", "closed"}).out, "5\n");
}

TEST(Cli, CountFormats) {
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "-n", "1", "--profile", "4", "--format", "csv"}).out,
            "mu1,value\n4,4\n");
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "-n", "1", "--profile", "4", "--format", "json"}).out,
            R"({"family":"Q","g":1,"n":1,"profile":[4],"value":"4"})"
            "\n");
}

TEST(Cli, RoutesAgree) {
  for (const char* mu : {"1,1,1", "3,2,0", "4,4,1"}) {
    const auto rec = cli({"count", "--family", "p", "-g", "0", "-n", "3", "--profile", mu});
    const auto tr = cli({"count", "--family", "p", "-g", "0", "-n", "3", "--profile", mu, "--route", "transform"});
    const auto cl = cli({"count", "--family", "p", "-g", "0", "-n", "3", "--profile", mu, "--route", "closed"});
    EXPECT_EQ(rec.out, tr.out);
    EXPECT_EQ(rec.out, cl.out);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({"count", "--family", "x", "-g", "1", "--profile", "4"}).code, 2);
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "-n", "2", "--profile", "4"}).code, 2);
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "--profile", "-4"}).code, 2);
  EXPECT_EQ(cli({"count", "--family", "q", "-g", "1", "--profile", "4", "--route", "transform"}).code, 2);
  EXPECT_EQ(cli({"count", "--family", "p", "-g", "0", "--profile", "4", "--route", "transform"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"fit", "--family", "q", "-g", "0", "-n", "2"}).code, 2);
}

TEST(Cli, TableExamples) {
  EXPECT_EQ(column(cli({"table", "--family", "q", "-g", "0", "-n", "2", "--max", "2"}).out), "1,0,0,0,1,0,0,0,2");
  EXPECT_EQ(column(cli({"table", "--family", "n", "-g", "1", "-n", "1", "--max", "3"}).out), "1,0,1,0");
  EXPECT_EQ(column(cli({"table", "--family", "p", "-g", "1", "-n", "1", "--max", "3"}).out), "1,1,4,17");
  const auto head = cli({"table", "--family", "q", "-g", "0", "-n", "2", "--max", "0"}).out;
  EXPECT_EQ(head, "mu1,mu2,value\n0,0,1\n");
}

TEST(Cli, FitExamples) {
  const auto torus = cli({"fit", "--family", "q", "-g", "1", "-n", "1"});
  EXPECT_EQ(torus.code, 0);
  EXPECT_NE(torus.out.find("1/24*x1^3 - 1/24*x1"), std::string::npos);
  const auto sphere = cli({"fit", "--family", "q", "-g", "0", "-n", "4"});
  EXPECT_EQ(sphere.code, 0);
  EXPECT_NE(sphere.out.find(R"("degree":6)"), std::string::npos);
  const auto structure = cli({"fit", "--family", "q", "-g", "1", "-n", "1", "--structure"});
  EXPECT_NE(structure.out.find("1/6*x1^4 + 1/4*x1^3 + 31/12*x1^2 - 7*x1 + 3"), std::string::npos);
}

TEST(Cli, Intersect) {
  EXPECT_EQ(cli({"intersect", "-g", "1", "-n", "1"}).out, "(1,1) d=(1): 1/24\n");
  EXPECT_EQ(cli({"intersect", "--family", "n", "-g", "1", "-n", "1", "--format", "json"}).out,
            R"([{"d":[1],"g":1,"n":1,"value":"1/24"}])"
            "\n");
}

TEST(Cli, VerifySuites) {
  const auto inter = cli({"verify", "--suite", "intersections"});
  EXPECT_EQ(inter.code, 0);
  EXPECT_NE(inter.out.find("(1,1): 1/24"), std::string::npos);
  const auto pull = cli({"verify", "--suite", "pullback", "--order", "12"});
  EXPECT_EQ(pull.code, 0);
  EXPECT_NE(pull.out.find("ε=−1, orders 0..12 match"), std::string::npos);
  const auto routes = cli({"verify", "--suite", "routes"});
  EXPECT_EQ(routes.code, 0);
  EXPECT_NE(routes.out.find("PASS [1] P(1,1;μ≤16): recursive == transform == closed"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, 2);
}

TEST(Cli, CacheRoundTripIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "polycount_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "cache.txt").string();
  std::filesystem::remove(path);

  const std::vector<std::string> args{"table", "--family", "q", "-g", "1", "-n", "2", "--max", "4", "--cache", path};
  const auto first = cli(args);
  std::ifstream in1(path);
  const std::string saved((std::istreambuf_iterator<char>(in1)), std::istreambuf_iterator<char>());
  EXPECT_FALSE(saved.empty());

  const auto second = cli(args);
  std::ifstream in2(path);
  const std::string resaved((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(saved, resaved);

  std::ofstream(path) << "garbage line\n";
  EXPECT_EQ(cli(args).code, 2);
  std::filesystem::remove_all(dir);
}
