#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ybx/json_io.hpp"

using namespace ybx;

TEST_CASE("matrix json round-trip is bit-exact for exact kinds") {
  Mat<Rational> r(2);
  r(0, 0) = rat(22, 7);
  r(0, 1) = rat(-1, 3);
  r(1, 0) = rat(0);
  r(1, 1) = rat(123456789, 987654321);
  const AnyMatrix a{r};
  const Json j = matrix_to_json(a);
  CHECK(j.at("scalar") == "rational");
  CHECK(j.at("entries")[0][0] == "22/7");
  CHECK(matrix_from_json(j) == a);

  Mat<GaussRational> g(2);
  g(0, 0) = GaussRational(rat(1, 2), rat(-3, 5));
  g(1, 1) = GaussRational(rat(0), rat(7));
  const AnyMatrix ag{g};
  const Json jg = matrix_to_json(ag);
  CHECK(jg.at("entries")[0][0] == "1/2-3/5*i");
  CHECK(matrix_from_json(jg) == ag);
}

TEST_CASE("matrix json float kinds use numbers and pairs") {
  Mat<double> f(2);
  f(0, 1) = 0.1;
  f(1, 0) = -3.25e-8;
  const Json jf = matrix_to_json(AnyMatrix{f});
  CHECK(jf.at("scalar") == "float");
  CHECK(jf.at("entries")[0][1].is_number());
  CHECK(matrix_from_json(jf) == AnyMatrix{f});

  Mat<Complex> c(2);
  c(0, 0) = Complex(1.5, -2.5);
  const Json jc = matrix_to_json(AnyMatrix{c});
  CHECK(jc.at("scalar") == "cfloat");
  CHECK(jc.at("entries")[0][0] == Json::array({1.5, -2.5}));
  CHECK(matrix_from_json(jc) == AnyMatrix{c});
}

TEST_CASE("matrix json errors name the offending field") {
  CHECK_THROWS_WITH_AS(matrix_from_json(Json{{"dim", 2}, {"scalar", "rational"}}),
                       doctest::Contains("entries"), ParseError);
  CHECK_THROWS_WITH_AS(matrix_from_json(Json{{"scalar", "rational"}, {"entries", Json::array()}}),
                       doctest::Contains("dim"), ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(Json{{"dim", 1}, {"scalar", "epic"}, {"entries", {{"1"}}}}),
      ParseError);
  // Exact kinds must be strings, not numbers.
  CHECK_THROWS_AS(matrix_from_json(Json{{"dim", 1}, {"scalar", "rational"}, {"entries", {{1}}}}),
                  ParseError);
}

TEST_CASE("finite map json round-trip and validation") {
  FiniteMap s = twist_map(3);
  const Json j = finite_map_to_json(s);
  CHECK(j.at("n") == 3);
  CHECK(finite_map_from_json(j) == s);
  Json bad = j;
  bad["table"][0] = Json::array({5, 0});  // out of range
  CHECK_THROWS_AS(finite_map_from_json(bad), ValidationError);
  bad = j;
  bad["table"].erase(0);
  CHECK_THROWS_AS(finite_map_from_json(bad), ValidationError);
}

namespace {

Json dual_algebra_json() {
  // k[x]/(x^2) in basis (1, x).  Json::array everywhere: brace-nesting pairs
  // of strings would silently build objects instead.
  Json mul = Json::array(
      {Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}),    // 1*1, 1*x
       Json::array({Json::array({"0", "1"}), Json::array({"0", "0"})})});  // x*1, x*x
  return Json{{"dim", 2}, {"unit", Json::array({"1", "0"})}, {"mul", std::move(mul)}};
}

}  // namespace

TEST_CASE("algebra loader matches the named structure and validates") {
  const AnyAlgebra a = algebra_from_json(dual_algebra_json());
  const auto& alg = std::get<FiniteAlgebraT<Rational>>(a);
  const FiniteAlgebra named = *named_algebra("dual");
  CHECK(alg.dim == named.dim);
  CHECK(alg.unit == named.unit);
  CHECK(alg.mul == named.mul);

  Json bad = dual_algebra_json();
  bad["mul"][1][1][0] = "1";  // x*x = 1 breaks nothing associativity-wise (k[x]/(x^2-1))...
  CHECK_NOTHROW(algebra_from_json(bad));
  bad["mul"][0][1][1] = "2";  // ...but a broken unit row does
  CHECK_THROWS_AS(algebra_from_json(bad), ValidationError);

  Json gauss = dual_algebra_json();
  gauss["scalar"] = "gauss";
  CHECK(std::holds_alternative<FiniteAlgebraT<GaussRational>>(algebra_from_json(gauss)));
  gauss["scalar"] = "float";
  CHECK_THROWS_AS(algebra_from_json(gauss), ParseError);
}

TEST_CASE("lie loader enforces the axioms") {
  Json j{{"dim", 3},
         {"grading", {0, 0, 0}},
         {"z", {"0", "0", "1"}},
         {"bracket", Json::array()}};
  // [e0,e1] = e2 and antisymmetric counterpart; everything else zero.
  Json cube = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json plane = Json::array();
    for (int k = 0; k < 3; ++k) plane.push_back(Json::array({"0", "0", "0"}));
    cube.push_back(plane);
  }
  cube[0][1][2] = "1";
  cube[1][0][2] = "-1";
  j["bracket"] = cube;
  const AnyLie l = lie_from_json(j);
  CHECK(std::get<LieSuperAlgebraT<Rational>>(l).dim == 3);

  Json bad = j;
  bad["bracket"][1][0][2] = "1";  // breaks antisymmetry
  CHECK_THROWS_AS(lie_from_json(bad), ValidationError);
  bad = j;
  bad["grading"] = Json::array({0, 0});
  CHECK_THROWS_AS(lie_from_json(bad), ParseError);
  bad = j;
  bad["z"] = Json::array({"0", "1", "0"});  // e1 is not central against e0
  CHECK_THROWS_AS(lie_from_json(bad), ValidationError);
}

TEST_CASE("bilinear structure round-trip") {
  const BilinearStructure s = endo_structure(rat(2), rat(3), 2);
  CHECK(bilinear_from_json(bilinear_to_json(s)) == s);
  CHECK_THROWS_WITH_AS(bilinear_from_json(Json{{"dim", 2}}), doctest::Contains("mul"),
                       ParseError);
}

TEST_CASE("functional spec loader applies defaults") {
  const FunctionalSpec f =
      functional_from_json(Json{{"dim", 2}, {"f", {"1", "1/2"}}});
  CHECK(f.dim == 2);
  CHECK(f.alpha == rat(1));
  CHECK(f.beta == rat(1));
  CHECK(f.e.empty());
  const FunctionalSpec g = functional_from_json(
      Json{{"dim", 2}, {"f", {"1", "0"}}, {"e", {"1", "3"}}, {"alpha", "2/3"}});
  CHECK(g.e == std::vector<Rational>{rat(1), rat(3)});
  CHECK(g.alpha == rat(2, 3));
}

TEST_CASE("color function triple loader") {
  const auto c = color_triple_from_json(
      Json{{"kind", "constant"}, {"alpha", "2"}, {"beta", "3"}, {"gamma", "5"}});
  CHECK(c.kind == ColorFunctionTriple::Kind::constant);
  CHECK(c.const_beta == rat(3));

  const auto n = color_triple_from_json(Json{{"kind", "named"}, {"name", "equal-sum"}});
  CHECK(n.kind == ColorFunctionTriple::Kind::named);
  CHECK_THROWS_AS(color_triple_from_json(Json{{"kind", "named"}, {"name", "nope"}}),
                  ParseError);

  auto grid2 = [](const char* v) {
    return Json::array({Json::array({v, v}), Json::array({v, v})});
  };
  const Json table{{"kind", "table"},
                   {"colors", Json::array({"1", "2"})},
                   {"alpha", grid2("1")},
                   {"beta", grid2("2")},
                   {"gamma", grid2("3")}};
  const auto t = color_triple_from_json(table);
  CHECK(t.table.lookup(t.table.beta, rat(1), rat(2)) == rat(2));
  Json badt = table;
  badt["alpha"] = Json::array({Json::array({"1", "1"})});
  CHECK_THROWS_AS(color_triple_from_json(badt), ParseError);
}

TEST_CASE("report serializers carry exact strings") {
  const auto rep = yb_residual(AnyMatrix{twist_matrix<Rational>(2)}, 2, Form::braid);
  const Json j = yb_report_to_json(rep);
  CHECK(j.at("form") == "braid");
  CHECK(j.at("residual").at("zero") == true);
  CHECK(j.at("residual").at("exact") == true);

  const Thm41Result t = thm41_check(4);
  const Json tj = thm41_to_json(t, 2);
  CHECK(tj.at("rows").size() == 2);
  CHECK(tj.at("rows_total") == 4);
  CHECK(tj.at("rows")[1].at("lhs") == "5/4");
}
