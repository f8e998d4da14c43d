#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ybx/linear_yb.hpp"

using namespace ybx;

TEST_CASE("the dual-number operator at (1,1,1) is the expected 4x4 gate") {
  const auto [gate, cnot] = gate_matrices();
  const long expect[4][4] = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(gate(i, j) == rat(expect[i][j]));
  CHECK(gate == build_r_assoc<Rational>(algebra_dual_numbers(), rat(1), rat(1), rat(1)));

  const long cexpect[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(cnot(i, j) == rat(cexpect[i][j]));
}

TEST_CASE("both gates are involutions; only the first solves the braid form") {
  const auto [gate, cnot] = gate_matrices();
  for (const auto& m : {gate, cnot}) {
    CHECK(m * m == Mat<Rational>::identity(4));
  }
  const YbReport rep = yb_residual(gate, 2, Form::braid);
  CHECK(rep.residual.zero);
  CHECK(rep.residual.exact);
  CHECK(rep.invertible);
  // The controlled-NOT squares to the identity but is not a braid solution.
  const YbReport crep = yb_residual(cnot, 2, Form::braid);
  CHECK_FALSE(crep.residual.zero);
  CHECK_FALSE(yb_residual(cnot, 2, Form::qybe).residual.zero);
}

namespace {

// 27 parameter triples spanning the three sufficient branches.
std::vector<std::array<Rational, 3>> sweep_triples() {
  std::vector<std::array<Rational, 3>> out;
  const Rational vals[] = {rat(1), rat(-2), rat(1, 2), rat(3), rat(0), rat(7, 5)};
  // case (i): alpha == gamma
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3; ++b) out.push_back({vals[a], vals[b + 1], vals[a]});
  // case (ii): beta == gamma
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3; ++b) out.push_back({vals[b + 2], vals[a], vals[a]});
  // case (iii): alpha == beta == 0
  out.push_back({rat(0), rat(0), rat(1)});
  out.push_back({rat(0), rat(0), rat(-3)});
  out.push_back({rat(0), rat(0), rat(5, 7)});
  return out;
}

}  // namespace

TEST_CASE("case sweep: all four algebras give exact braid solutions") {
  const auto triples = sweep_triples();
  REQUIRE(triples.size() == 27);
  const char* names[] = {"k", "dual", "m2", "kxk"};
  for (const char* name : names) {
    const FiniteAlgebra a = *named_algebra(name);
    for (const auto& [al, be, ga] : triples) {
      CHECK(yb_param_case(Scalar(al), Scalar(be), Scalar(ga)) != ParamCase::none);
      const auto r = build_r_assoc(a, al, be, ga);
      const YbReport rep = yb_residual(r, a.dim, Form::braid);
      CHECK(rep.residual.zero);
    }
  }
}

TEST_CASE("negative control: (1,2,3) on the dual numbers fails with a witness") {
  CHECK(yb_param_case(Scalar(rat(1)), Scalar(rat(2)), Scalar(rat(3))) == ParamCase::none);
  const auto r = build_r_assoc<Rational>(algebra_dual_numbers(), rat(1), rat(2), rat(3));
  const YbReport rep = yb_residual(r, 2, Form::braid);
  CHECK_FALSE(rep.residual.zero);
  REQUIRE(rep.witness.has_value());
  const auto& [row, col, val] = *rep.witness;
  CHECK(val != "0");
  CHECK(row >= 0);
  CHECK(col >= 0);
}

TEST_CASE("lie superalgebra operators solve the braid form") {
  for (const char* name : {"heisenberg", "abelian3", "abelian-super", "super-osc"}) {
    const LieSuperAlgebra l = *named_lie(name);
    for (const Rational& alpha : {rat(1), rat(5), rat(-2, 3)}) {
      const auto r = build_r_lie(l, alpha);
      const YbReport rep = yb_residual(r, l.dim, Form::braid);
      CHECK(rep.residual.zero);
    }
  }
}

TEST_CASE("structure validation rejects broken tables") {
  FiniteAlgebra a = algebra_dual_numbers();
  a.mul[0] = rat(2);  // 1*1 = 2*1 breaks the unit law
  CHECK_THROWS_AS(a.validate(), ValidationError);

  FiniteAlgebra b = algebra_m2();
  b.c(0, 1, 2) += rat(1);  // breaks associativity
  CHECK_THROWS_AS(b.validate(), ValidationError);

  LieSuperAlgebra l = lie_heisenberg();
  l.b(1, 0, 2) = rat(1);  // breaks antisymmetry
  CHECK_THROWS_AS(l.validate(), ValidationError);

  LieSuperAlgebra lz = lie_heisenberg();
  lz.z = {rat(1), rat(0), rat(0)};  // e0 is not central
  CHECK_THROWS_AS(lz.validate(), ValidationError);
}

TEST_CASE("transport: braid solutions correspond to flip-composed qybe solutions") {
  const auto corpus = transport_corpus();
  REQUIRE(corpus.size() >= 20);
  int braid_solutions = 0;
  for (const auto& [r, d] : corpus) {
    const bool braid_zero = yb_residual(r, d, Form::braid).residual.zero;
    const auto [r_tw, tw_r] = braid_qybe_transport(r, d);
    CHECK(yb_residual(r_tw, d, Form::qybe).residual.zero == braid_zero);
    CHECK(yb_residual(tw_r, d, Form::qybe).residual.zero == braid_zero);
    braid_solutions += braid_zero ? 1 : 0;
  }
  // The corpus must exercise both verdicts or the equivalence is vacuous.
  CHECK(braid_solutions >= 5);
  CHECK(braid_solutions <= static_cast<int>(corpus.size()) - 5);
}

TEST_CASE("transport round-trips through the any-matrix wrapper") {
  const auto tw = twist_matrix<Rational>(2);
  const auto [a, b] = braid_qybe_transport(AnyMatrix{tw}, 2);
  CHECK(a == AnyMatrix{Mat<Rational>::identity(4)});
  CHECK(b == AnyMatrix{Mat<Rational>::identity(4)});
  CHECK_THROWS_AS(braid_qybe_transport(tw, 3), DimError);
}

TEST_CASE("gauss-scalar algebras build and check exactly") {
  // k x k over Q(i) with a complex parameter choice in case (i).
  FiniteAlgebraT<GaussRational> a;
  const FiniteAlgebra base = algebra_k_times_k();
  a.dim = base.dim;
  for (const auto& u : base.unit) a.unit.emplace_back(u);
  for (const auto& c : base.mul) a.mul.emplace_back(c);
  const GaussRational i(rat(0), rat(1));
  const auto r = build_r_assoc(a, i, GaussRational(rat(2)), i);
  CHECK(yb_residual(r, a.dim, Form::braid).residual.zero);
}

TEST_CASE("form names round-trip") {
  CHECK(form_from_name("braid") == Form::braid);
  CHECK(form_from_name("qybe") == Form::qybe);
  CHECK(form_name(Form::qybe) == std::string("qybe"));
  CHECK_THROWS_AS(form_from_name("nope"), ParseError);
}
