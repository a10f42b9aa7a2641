#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gacalc/cli.hpp"
#include "gacalc/expr.hpp"
#include "oracles.hpp"

using namespace gacalc;
using R = Rational;
using MV = Multivector<R>;

namespace {

MV ev(const std::string& src) {
  return eval_expression<R>(src, Algebra<R>::pga3());
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("expr_cli") {

TEST_CASE("parsing basics") {
  ParseOptions opt;
  opt.dim = 4;

  const auto blade = parse("e0", opt);
  CHECK(blade->kind == Expr::Kind::kBlade);
  CHECK((blade->indices == std::vector<std::size_t>{0}));

  const auto alg = Algebra<R>::pga3();
  CHECK(ev("2 + 3*e1 - e01") ==
        MV::scalar(alg, R(2)) + R(3) * MV::basis_vector(alg, 1) - MV::blade(alg, 0b0011));

  const auto g = parse("grade(e1*e2, 2)", opt);
  CHECK(g->kind == Expr::Kind::kGradePart);
  CHECK(g->grade_k == 2);
  CHECK(g->a->kind == Expr::Kind::kMul);
}

TEST_CASE("precedence and associativity") {
  const auto alg = Algebra<R>::pga3();
  // Sums bind looser than any product.
  CHECK(ev("1 + e1*e2") == MV::one(alg) + MV::blade(alg, 0b0110));
  // The product tier is left-associative: e1*e0^e1 = (e1*e0)^e1 = 0.
  CHECK(ev("e1*e0^e1").is_zero());
  CHECK(ev("(e1*e0)^e1").is_zero());
  CHECK(ev("e1*(e0^e1)") == -MV::basis_vector(alg, 0));
  // Unary minus binds tighter than products.
  CHECK(ev("-e1*e2") == -MV::blade(alg, 0b0110));
  // The infix commutator sits in the product tier.
  CHECK(ev("e12 x e1") == ev("cmt(e12, e1)"));
}

TEST_CASE("evaluation") {
  const auto alg = Algebra<R>::pga3();
  CHECK(ev("e1*e1") == MV::one(alg));
  CHECK(ev("e0*e0").is_zero());
  CHECK(ev("cmt(e12, e1)") == -MV::basis_vector(alg, 2));
  CHECK(ev("gi(e1 + e12)") == -MV::basis_vector(alg, 1) + MV::blade(alg, 0b0110));
  CHECK(ev("inv(1 + e0)") == MV::one(alg) - MV::basis_vector(alg, 0));
  CHECK(ev("1/2*e1 + 1/2*e1") == MV::basis_vector(alg, 1));
  CHECK_THROWS_AS(ev("inv(e0)"), NotAUnit);
  CHECK_THROWS_AS(ev("grade(e1, 7)"), GradeOutOfRange);
}

TEST_CASE("syntax errors carry offsets") {
  ParseOptions opt;
  opt.dim = 4;
  try {
    parse("e1 + ", opt);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 5);
    CHECK(!e.expected.empty());
  }
  try {
    parse("(e1", opt);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK((e.expected == std::vector<std::string>{")"}));
  }
  CHECK_THROWS_AS(parse("e4", opt), UnknownBlade);
  CHECK_THROWS_AS(parse("e21", opt), SyntaxError);
  CHECK_THROWS_AS(parse("0.5", opt), SyntaxError);  // decimals need float mode
  CHECK_THROWS_AS(parse("foo(1)", opt), SyntaxError);

  // Underscored blade literals.
  const auto alg = Algebra<R>::pga3();
  CHECK(ev("e0_1") == MV::blade(alg, 0b0011));
}

TEST_CASE("float mode literals") {
  const auto alg = Algebra<double>::pga3();
  using MVd = Multivector<double>;
  CHECK(eval_expression<double>("0.5*e1", alg) == 0.5 * MVd::basis_vector(alg, 1));
  CHECK(eval_expression<double>("2e1", alg) == MVd::scalar(alg, 20.0));
  CHECK(eval_expression<double>("1e-07", alg) == MVd::scalar(alg, 1e-7));
  CHECK(eval_expression<double>("2*e1", alg) == 2.0 * MVd::basis_vector(alg, 1));
}

TEST_CASE("print/parse round trip is exact in rational mode") {
  const auto alg = Algebra<R>::pga3();
  testing::Gen gen(61);
  for (int t = 0; t < 1000; ++t) {
    const MV m = gen.mv(alg);
    CHECK(eval_expression<R>(m.str(), alg) == m);
  }
}

TEST_CASE("print/parse round trip in float mode") {
  const auto alg = Algebra<double>::pga3();
  testing::Gen gen(67);
  for (int t = 0; t < 200; ++t) {
    const auto m = gen.mv_double(alg);
    CHECK(eval_expression<double>(m.str(), alg) == m);
  }
}

TEST_CASE("cli eval") {
  auto r = run_cli({"eval", "e1*e1", "--rational"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run_cli({"eval", "e4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("blade index 4") != std::string::npos);

  r = run_cli({"eval", "e0*e0", "--algebra", "3,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = run_cli({"eval", "e0*e0", "--algebra", "3,0,0", "--rational"});
  CHECK(r.out == "1\n");

  r = run_cli({"eval", "e0*e0", "--signature", "3,0,1", "--rational"});
  CHECK(r.out == "0\n");

  r = run_cli({"eval", "cmt(e12, e1)", "--rational", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algebra"] == "3,0,1");
  CHECK(j["terms"] == nlohmann::json({{"e2", "-1"}}));
}

TEST_CASE("cli decompose") {
  const auto r = run_cli({"decompose", "--point", "0,0,0", "2*e0 + e1 + 3*e01",
                          "--rational"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "at_point: e1\n"
        "at_infinity: 2*e0 + 3*e01\n"
        "cofactor: 2 - 3*e1\n");
}

TEST_CASE("cli parallel and angle") {
  auto r = run_cli({"parallel", "--point", "0,0,2", "--plane", "1,0,0,1", "--rational"});
  CHECK(r.code == 0);
  CHECK(r.out == "plane: -2,0,0,1\n");

  r = run_cli({"angle", "--plane1", "0,1,0,0", "--plane2", "0,0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 13) == "angle: 1.5707");
}

TEST_CASE("cli units and inv") {
  auto r = run_cli({"units", "--decompose", "e1 + e0", "--point", "0,0,0", "--rational"});
  CHECK(r.code == 0);
  CHECK(r.out == "r: e1\ntail: e1\n");

  r = run_cli({"inv", "e0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a unit") != std::string::npos);
}

TEST_CASE("cli lie-table") {
  const auto r = run_cli({"lie-table", "--algebra", "pga3", "--rational"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e01 x e12 = e02") != std::string::npos);
}

TEST_CASE("cli check") {
  auto r = run_cli({"check", "--suite", "commuting-e0"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 17) == "PASS commuting-e0");

  r = run_cli({"check", "--suite", "no-such-suite"});
  CHECK(r.code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"eval"}).code == 2);
  CHECK(run_cli({"eval", "e1", "--algebra", "13,0,0"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

}  // TEST_SUITE
