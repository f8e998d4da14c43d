#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "ybx/set_yb.hpp"

using namespace ybx;

namespace {

std::array<Scalar, 3> rtriple(long a, long b, long c) {
  return {Scalar(rat(a)), Scalar(rat(b)), Scalar(rat(c))};
}

}  // namespace

TEST_CASE("identity, twist and the logic map solve their forms") {
  for (int n : {1, 2, 3}) {
    for (Form f : {Form::braid, Form::qybe}) {
      CHECK(set_yb_check(identity_map(n), f).pass);
      CHECK(set_yb_check(twist_map(n), f).pass);
    }
  }
  const SetYbReport logic = set_yb_check(logic_map(), Form::braid);
  CHECK(logic.pass);
  CHECK(logic.triples_checked == 8);
}

TEST_CASE("finite map validation") {
  FiniteMap bad;
  bad.n = 2;
  bad.table = {{0, 0}, {0, 1}, {1, 0}};  // wrong length
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.table = {{0, 0}, {0, 1}, {1, 0}, {2, 1}};  // out of range
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("power family: frozen chain values at (2,3,5) with (alpha,beta) = (1,2)") {
  ClosedFormFamily f;
  f.kind = FamilyKind::power;
  f.alpha = Scalar(rat(1));
  f.beta = Scalar(rat(2));
  const SetYbReport rep = check_family(f, Form::braid, {rtriple(2, 3, 5)});
  CHECK(rep.pass);
  // Independently derived: both chains give (5, 9/5, 16/45).
  const auto e = ExponentQuadruple{0, 1, 2, -1};
  auto step = [&](const Rational& x, const Rational& y) {
    return std::pair{Rational(pow_rational(x, e.m) * pow_rational(y, e.n)),
                     Rational(pow_rational(x, e.p) * pow_rational(y, e.q))};
  };
  auto [u1, u2] = step(rat(2), rat(3));
  auto [v1, v2] = step(u2, rat(5));
  auto [w1, w2] = step(u1, v1);
  CHECK(w1 == rat(5));
  CHECK(w2 == rat(9, 5));
  CHECK(v2 == rat(16, 45));
}

TEST_CASE("power family passes braid for small exponents, fails displayed form") {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      ClosedFormFamily f;
      f.kind = FamilyKind::power;
      f.alpha = Scalar(rat(a));
      f.beta = Scalar(rat(b));
      const auto triples = default_family_triples(FamilyKind::power);
      CHECK(check_family(f, Form::braid, triples).pass);
      const bool is_flip = (a == 1 && b == 1);  // (y, x): solves both forms
      CHECK(check_family(f, Form::qybe, triples).pass == is_flip);
    }
}

TEST_CASE("quotient-square map: the exact counterexample triple") {
  ClosedFormFamily f;
  f.kind = FamilyKind::quotient_square;
  const SetYbReport braid = check_family(f, Form::braid, {rtriple(2, 3, 5)});
  CHECK_FALSE(braid.pass);
  REQUIRE(braid.counterexample.has_value());
  const auto& ce = *braid.counterexample;
  CHECK(ce.input == std::array<std::string, 3>{"2", "3", "5"});
  CHECK(ce.lhs == std::array<std::string, 3>{"5/6", "4/9", "16"});
  CHECK(ce.rhs == std::array<std::string, 3>{"10/3", "4/9", "16"});

  const SetYbReport qybe = check_family(f, Form::qybe, {rtriple(2, 3, 5)});
  CHECK_FALSE(qybe.pass);
  REQUIRE(qybe.counterexample.has_value());
  CHECK(qybe.counterexample->lhs == std::array<std::string, 3>{"10/27", "4/81", "4"});
  CHECK(qybe.counterexample->rhs == std::array<std::string, 3>{"2/15", "9", "16"});
}

TEST_CASE("linear family over the gauss rationals") {
  const GaussRational i(rat(0), rat(1));
  ClosedFormFamily f;
  f.kind = FamilyKind::linear;
  const auto triples = default_family_triples(FamilyKind::linear);
  for (const auto& [a, b] : std::vector<std::pair<GaussRational, GaussRational>>{
           {i, GaussRational(rat(1))},
           {GaussRational(rat(1), rat(1)), GaussRational(rat(2))},
           {GaussRational(rat(1, 2)), GaussRational(rat(1, 3), rat(1))}}) {
    f.alpha = Scalar(a);
    f.beta = Scalar(b);
    CHECK(check_family(f, Form::braid, triples).pass);
  }
  // alpha = beta = 1 is the literal flip, which solves both forms; scaled
  // variants with alpha*beta = 1 do not (checked by hand on the qybe chains).
  f.alpha = Scalar(GaussRational(rat(1)));
  f.beta = Scalar(GaussRational(rat(1)));
  CHECK(check_family(f, Form::braid, triples).pass);
  CHECK(check_family(f, Form::qybe, triples).pass);
  f.alpha = Scalar(GaussRational(rat(2)));
  f.beta = Scalar(GaussRational(rat(1, 2)));
  CHECK(check_family(f, Form::braid, triples).pass);
  CHECK_FALSE(check_family(f, Form::qybe, triples).pass);
  // Generic parameters do not.
  f.alpha = Scalar(i);
  f.beta = Scalar(GaussRational(rat(1)));
  CHECK_FALSE(check_family(f, Form::qybe, triples).pass);
}

TEST_CASE("family domain errors") {
  ClosedFormFamily f;
  f.kind = FamilyKind::power;
  f.alpha = Scalar(rat(0));
  f.beta = Scalar(rat(1));
  CHECK_THROWS_AS(check_family(f, Form::braid, {rtriple(1, 1, 1)}), DomainError);
  f.alpha = Scalar(rat(1, 2));
  CHECK_THROWS_AS(check_family(f, Form::braid, {rtriple(1, 1, 1)}), DomainError);
  f.alpha = Scalar(rat(1));
  CHECK_THROWS_AS(check_family(f, Form::braid, {rtriple(2, -3, 5)}), DomainError);

  ClosedFormFamily q;
  q.kind = FamilyKind::quotient_square;
  CHECK_THROWS_AS(check_family(q, Form::braid, {rtriple(2, 0, 5)}), DomainError);

  ClosedFormFamily l;
  l.kind = FamilyKind::logic;
  CHECK_THROWS_AS(check_family(l, Form::braid, {rtriple(0, 1, 2)}), DomainError);

  ClosedFormFamily g;
  g.kind = FamilyKind::gcdlcm;
  CHECK_THROWS_AS(check_family(g, Form::braid, {rtriple(4, -6, 10)}), DomainError);
}

TEST_CASE("logic, minmax and gcdlcm families pass braid on their default triples") {
  for (FamilyKind k : {FamilyKind::logic, FamilyKind::minmax, FamilyKind::gcdlcm}) {
    ClosedFormFamily f;
    f.kind = k;
    const auto triples = default_family_triples(k);
    CHECK_FALSE(triples.empty());
    CHECK(check_family(f, Form::braid, triples).pass);
  }
}

TEST_CASE("pow_rational") {
  CHECK(pow_rational(rat(2, 3), -2) == rat(9, 4));
  CHECK(pow_rational(rat(-2), 3) == rat(-8));
  CHECK(pow_rational(rat(5), 0) == rat(1));
  CHECK(pow_rational(rat(0), 3) == rat(0));
  CHECK_THROWS_AS(pow_rational(rat(0), -1), DomainError);
}

TEST_CASE("exponent system matches the naive bound-2 oracle") {
  // Naive oracle: the braid conditions written straight out, 5^4 loop.
  std::set<ExponentQuadruple> naive;
  for (long m = -2; m <= 2; ++m)
    for (long n = -2; n <= 2; ++n)
      for (long p = -2; p <= 2; ++p)
        for (long q = -2; q <= 2; ++q)
          if (m * n * q == 0 && m * p * q == 0 && m * q * q == m * m * q &&
              m * m + m * n * p == m && q * q + n * p * q == q)
            naive.insert({m, n, p, q});
  CHECK(naive.size() == 56);

  const auto solved = solve_exponent_system(2);
  CHECK(solved.size() == naive.size());
  CHECK(std::set<ExponentQuadruple>(solved.begin(), solved.end()) == naive);
  CHECK(std::is_sorted(solved.begin(), solved.end()));

  for (const ExponentQuadruple e :
       {ExponentQuadruple{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 2, -1}}) {
    CHECK(naive.count(e) == 1);
    CHECK(monomial_satisfies_system(e, Form::braid));
  }
}

TEST_CASE("solved quadruples pass braid on random positive rational triples") {
  unsigned long s = 99991;
  auto next = [&] {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return rat(1 + (s >> 33) % 50, 1 + (s >> 13) % 20);
  };
  std::vector<std::array<Rational, 3>> triples;
  for (int i = 0; i < 50; ++i) triples.push_back({next(), next(), next()});
  for (const auto& e : solve_exponent_system(1)) {
    const SetYbReport rep = check_monomial(e, Form::braid, triples);
    CHECK(rep.pass);
    CHECK(rep.triples_checked == 50);
  }
}

TEST_CASE("the displayed-form exponent system is genuinely different") {
  // (0,1,2,-1) solves braid but not the displayed form; the flip solves both.
  CHECK(monomial_satisfies_system({0, 1, 2, -1}, Form::braid));
  CHECK_FALSE(monomial_satisfies_system({0, 1, 2, -1}, Form::qybe));
  CHECK(monomial_satisfies_system({0, 1, 1, 0}, Form::qybe));
  CHECK(check_monomial({0, 1, 2, -1}, Form::qybe,
                       {{rat(2), rat(3), rat(5)}})
            .pass == false);
}

TEST_CASE("exponential morphism links the linear and power families") {
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < 10; ++i) samples.emplace_back(0.1 * i - 0.4, 0.07 * i + 0.05);
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}, {3, 1}}) {
    const ExpMorphismReport rep = exp_morphism_check(a, b, samples);
    CHECK(rep.symbolic_pass);
    CHECK(rep.numeric_pass);
    CHECK(rep.samples == samples.size());
    CHECK(rep.max_rel_err < kExpMorphismTol);
  }
}

TEST_CASE("symmetry instances of three-space") {
  const SymmetryReport rep = symmetry_checks();
  CHECK(rep.closure);
  CHECK(rep.klein_subgroup);
  CHECK(rep.planes_to_point);
  CHECK(rep.axes_to_identity);
  CHECK(rep.pass);
}

TEST_CASE("yb sort reaches the expected fixpoints") {
  using V = std::vector<mpz_class>;
  CHECK(yb_sort({3, 1, 2}, SortMode::minmax) == V{1, 2, 3});
  CHECK(yb_sort({5, 4, 3, 2, 1}, SortMode::minmax) == V{1, 2, 3, 4, 5});
  CHECK(yb_sort({}, SortMode::minmax) == V{});
  CHECK(yb_sort({4, 6, 10}, SortMode::gcdlcm) == V{2, 2, 60});
  // gcd-lcm braid moves preserve the product.
  const V out = yb_sort({12, 18, 30}, SortMode::gcdlcm);
  mpz_class prod = 1;
  for (const auto& v : out) prod *= v;
  CHECK(prod == 12 * 18 * 30);
  for (size_t i = 0; i + 1 < out.size(); ++i) CHECK(out[i + 1] % out[i] == 0);
  CHECK_THROWS_AS(yb_sort({4, 0, 10}, SortMode::gcdlcm), DomainError);
}

TEST_CASE("family and sort-mode names round-trip") {
  for (FamilyKind k : {FamilyKind::power, FamilyKind::linear, FamilyKind::quotient_square,
                       FamilyKind::logic, FamilyKind::minmax, FamilyKind::gcdlcm})
    CHECK(family_kind_from_name(family_kind_name(k)) == k);
  CHECK_THROWS_AS(family_kind_from_name("nope"), ParseError);
  CHECK(sort_mode_from_name("minmax") == SortMode::minmax);
  CHECK(sort_mode_from_name("gcdlcm") == SortMode::gcdlcm);
  CHECK_THROWS_AS(sort_mode_from_name("x"), ParseError);
}
