#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sys/wait.h>

#include "cheb/error.hpp"
#include "cheb/report.hpp"
#include "support.hpp"

using namespace cheb;
using testing::group;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CHEB_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

ErrorCode parse_error_code(const std::string& spec) {
  try {
    parse_group(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << spec);
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("group specs") {
    CHECK(group("perm 3 (1,2,3) (1,2)").order() == 6);
    CHECK(group("perm 4 (1,2)(3,4) (1,3)(2,4)").order() == 4);
    CHECK(group("affine 2 2 [[0,1],[1,1]]").order() == 12);
    CHECK(group("direct_product { cyclic 2 } { symmetric 3 }").order() == 12);
    CHECK(group("direct_product { direct_product { cyclic 2 } { cyclic 2 } } { cyclic 3 }").order() == 12);
    CHECK(group("affine 5 1 [[2]]").order() == 20);
    CHECK(group("affine 3 1 [[2]] power 2").order() == 18);
    CHECK(group("affine 2 2 [[0,1],[1,1]] [[0,1],[1,0]]").order() == 24);
  }

  TEST_CASE("whitespace does not matter") {
    const auto a = parse_group("affine 2 2 [[0,1],[1,1]]");
    const auto b = parse_group("  affine   2 2   [[0, 1], [1, 1]]  ");
    CHECK(a.group.order() == b.group.order());
    CHECK(a.label == b.label);
    CHECK(parse_group("direct_product {cyclic 2} {cyclic 3}").group.order() == 6);
    CHECK(tokenize_spec("direct_product {cyclic 2}{ cyclic 3 }") ==
          std::vector<std::string>{"direct_product", "{", "cyclic", "2", "}", "{", "cyclic", "3", "}"});
  }

  TEST_CASE("bad specs") {
    CHECK(parse_error_code("") == ErrorCode::ParseError);
    CHECK(parse_error_code("cyclic") == ErrorCode::ParseError);
    CHECK(parse_error_code("cyclic x") == ErrorCode::ParseError);
    CHECK(parse_error_code("hypercube 3") == ErrorCode::ParseError);
    CHECK(parse_error_code("cyclic 3 extra") == ErrorCode::ParseError);
    CHECK(parse_error_code("direct_product { cyclic 2 }") == ErrorCode::ParseError);
    CHECK(parse_error_code("direct_product { cyclic 2 } { cyclic 3") == ErrorCode::ParseError);
    CHECK(parse_error_code("elementary 4 2") == ErrorCode::NotPrime);
    CHECK(parse_error_code("affine 2 2 [[1,1],[1,1]]") == ErrorCode::NotInvertibleMatrix);
    CHECK(parse_error_code("affine 2 2 [[1,1]]") == ErrorCode::ParseError);
    CHECK(parse_error_code("perm 3 (1,4)") == ErrorCode::ParseError);
    CHECK(parse_error_code("dihedral 2") == ErrorCode::ParseError);
    try {
      parse_group("symmetric 6", 100);
      FAIL("expected OrderCapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderCapExceeded);
    }
  }

  TEST_CASE("group files") {
    const auto groups = parse_group_file("# small groups\ncyclic 2\n\n  symmetric 3\n# trailing\nelementary 2 2\n");
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].group.order() == 2);
    CHECK(groups[1].group.order() == 6);
    CHECK(groups[2].group.order() == 4);
    CHECK(parse_group_file("# nothing\n\n").empty());
  }

  TEST_CASE("decimal output round-trips") {
    for (const Rational& r : {Rational(94, 21), Rational(19, 5), Rational(10, 3), Rational(1, 7),
                              Rational(123456789, 1000), Rational(2, 3000000)}) {
      const auto text = decimal12(r);
      const double back = to_double(parse_rational(text));
      CHECK(std::fabs(back - to_double(r)) <= 1e-11 * std::fabs(to_double(r)));
    }
    CHECK(decimal12(Rational(10, 3)) == "3.33333333333");
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("7/14") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
  }

  TEST_CASE("report JSON") {
    const auto g = parse_group("symmetric 3");
    auto j = make_report("exact");
    j["group"] = group_json(g);
    j["chebotarev"] = cheb_json(chebotarev(g.group));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["group"]["order"] == 6);
    CHECK(j["chebotarev"]["exact"] == "19/5");
    CHECK(parse_rational(j["chebotarev"]["decimal"].get<std::string>()) == Rational(38, 10));

    const auto b = bounds_json(evaluate_bounds(parse_group("alternating 5").group, "A5"));
    CHECK(b["crown_bound"].is_null());
    CHECK(b["verdicts"]["crown"] == "NOT_APPLICABLE");
    CHECK(b["exact"]["exact"].is_string());
  }

  TEST_CASE("command line") {
    const auto exact = run_cli("exact --json cyclic 6");
    CHECK(exact.status == 0);
    const auto j = nlohmann::json::parse(exact.out);
    CHECK(j["chebotarev"]["exact"] == "23/10");

    const auto affine = run_cli("exact --json affine 2 2 [[0,1],[1,1]]");
    CHECK(affine.status == 0);
    CHECK(nlohmann::json::parse(affine.out)["group"]["order"] == 12);

    const auto bounds = run_cli("bounds symmetric 4");
    CHECK(bounds.status == 0);
    CHECK(bounds.out.find("SATISFIED") != std::string::npos);

    const auto bad = run_cli("exact hypercube 3");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("error:") != std::string::npos);

    const auto mc1 = run_cli("mc --json --trials 2000 --seed 9 symmetric 3");
    const auto mc2 = run_cli("mc --json --trials 2000 --seed 9 symmetric 3");
    CHECK(mc1.status == 0);
    CHECK(nlohmann::json::parse(mc1.out)["mc"]["mean"] == nlohmann::json::parse(mc2.out)["mc"]["mean"]);

    CHECK(run_cli("exact --cap-sieves 0 cyclic 6").status != 0);
    CHECK(run_cli("exact --cap-order 10 symmetric 4").status == 2);
  }
}
