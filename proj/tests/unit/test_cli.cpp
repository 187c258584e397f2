#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "stechkin_cli/cli.hpp"
#include "stechkin_cli/figures.hpp"
#include "stechkin_cli/verify.hpp"

using namespace stechkin::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "stechkin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("constant subcommand") {
  const auto r = invoke({"constant", "c1", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("c1(2) = 1.5707963267949") != std::string::npos);
  CHECK(r.out.find("formula: ") != std::string::npos);
  const auto b = invoke({"constant", "C1_best", "2"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("1.1064957714") != std::string::npos);
  CHECK(b.out.find("status: reference") != std::string::npos);
  CHECK(invoke({"constant", "c1", "inf"}).code == kExitOk);
  CHECK(invoke({"constant", "c1_weak", "1.0005"}).code == kExitUsage);
  CHECK(invoke({"constant", "nope", "2"}).code == kExitUsage);
  CHECK(invoke({"constant", "c1", "0.5"}).code == kExitUsage);
  CHECK(invoke({"constant", "c1", "abc"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"bound", "--p", "0.2"}).code == kExitUsage);
  CHECK(invoke({"figure", "fig99"}).code == kExitUsage);
  CHECK(invoke({"figure", "fig1_c1", "--grid", "1"}).code == kExitUsage);
  CHECK(invoke({"verify", "everything"}).code == kExitUsage);
}

TEST_CASE("bound subcommand") {
  const auto r = invoke({"bound", "--p", "0.88", "--N", "100", "--M", "50000", "--q", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("supremum = 1.108698") != std::string::npos);
  CHECK(r.out.find("certified upper bound = ") != std::string::npos);
  const auto one = invoke({"bound", "--p", "1", "--q", "2"});
  CHECK(one.code == kExitOk);
  CHECK(one.out.find("1.15470053837") != std::string::npos);
}

TEST_CASE("extremal, continuous and sparse subcommands") {
  const auto s = invoke({"extremal", "strong", "--q", "2", "--kmax", "3"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("at k0 = 3") != std::string::npos);
  CHECK(invoke({"extremal", "weak-lower", "--q", "2", "--kmax", "1000"}).code == kExitOk);
  CHECK(invoke({"extremal", "weak-upper", "--q", "2", "--kmax", "4"}).out.find("at n = 2") != std::string::npos);
  CHECK(invoke({"extremal", "sideways"}).code == kExitUsage);
  CHECK(invoke({"continuous", "strong", "--q", "2", "--T", "3"}).code == kExitOk);
  CHECK(invoke({"continuous", "weak", "--q", "3", "--T", "5"}).out.find("0.529") != std::string::npos);
  const auto sp = invoke({"sparse", "check", "--alpha", "0.5", "--r", "tau", "--coeffs", "3,4"});
  CHECK(sp.code == kExitOk);
  CHECK(sp.out.find("1/1 inputs") != std::string::npos);
  CHECK(invoke({"sparse", "check", "--alpha", "1", "--r", "inf", "--trials", "20"}).code == kExitOk);
  CHECK(invoke({"sparse", "check", "--alpha", "1", "--r", "two"}).code == kExitUsage);
}

TEST_CASE("figure CSV format") {
  for (Figure f : kAllFigures) {
    const std::string a = figure_csv(f, 20);
    CHECK(a == figure_csv(f, 20));
    CHECK(a.find('\r') == std::string::npos);
    CHECK(a.back() == '\n');
    const auto ls = lines(a);
    REQUIRE(ls.size() == 21);
    CHECK(ls[0].rfind("inv_q,", 0) == 0);
    const auto cols = std::count(ls[0].begin(), ls[0].end(), ',');
    for (const auto& l : ls) {
      CHECK(l.back() != ',');
      CHECK(std::count(l.begin(), l.end(), ',') == cols);
    }
    CHECK(parse_figure(to_string(f)) == f);
  }
  // Grid 3 puts the middle row at 1/q = 1/2.
  const auto ls = lines(figure_csv(Figure::fig1_c1, 3));
  REQUIRE(ls.size() == 4);
  CHECK(ls[2] == "0.5," + format_number(std::numbers::pi / 2));
  CHECK(lines(figure_csv(Figure::fig4_c1weak, 3))[2] == "0.5,1.28254983016186");
  CHECK(format_number(0.1) == "0.1");
  CHECK_THROWS(figure_csv(Figure::fig1_c1, 1));
}

TEST_CASE("figure file output") {
  const auto r = invoke({"figure", "fig5_C1weak", "--grid", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == figure_csv(Figure::fig5_C1weak, 5));
  CHECK(invoke({"figure", "fig5_C1weak", "--out", "/nonexistent-dir/x/y.csv"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const auto r = invoke({"verify", "strong", "--trials", "5", "--seed", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out == invoke({"verify", "strong", "--trials", "5", "--seed", "3"}).out);
  CHECK(invoke({"verify", "all", "--trials", "0"}).code == kExitOk);
  const auto bad = invoke({"verify", "weak", "--trials", "3", "--inject-failure"});
  CHECK(bad.code == kExitPropertyFailure);
  CHECK(bad.out.find("FAIL ") != std::string::npos);
  CHECK(bad.out.find("reproduce: ") != std::string::npos);
}

TEST_CASE("verify suites are green") {
  VerifyOptions o;
  o.trials = 20;
  for (Suite s : {Suite::strong, Suite::weak, Suite::continuous, Suite::sparse}) {
    for (const auto& p : run_verify(s, o)) {
      INFO(p.name << " " << p.first_failure);
      CHECK(p.failed == 0);
      CHECK(p.passed == 20);
    }
  }
}
