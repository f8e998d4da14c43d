#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ybx/matrix.hpp"

using namespace ybx;

TEST_CASE("rational parsing is strict and canonical") {
  CHECK(rational_from_string("3/4") == rat(3, 4));
  CHECK(rational_from_string("-7") == rat(-7));
  CHECK(to_string(rational_from_string("6/8")) == "3/4");
  CHECK(to_string(rat(-2, 4)) == "-1/2");
  CHECK(to_string(rat(0, 9)) == "0");

  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("2 /3"), ParseError);
  CHECK_THROWS_AS(rational_from_string("+5/10"), ParseError);
}

TEST_CASE("gauss rational round-trips through its text form") {
  const char* cases[] = {"1/2+1/3*i", "-2-3*i", "5", "3*i", "-1/2*i", "0", "7/9-22/7*i"};
  for (const char* c : cases) {
    const GaussRational g = gauss_from_string(c);
    CHECK(gauss_from_string(to_string(g)) == g);
  }
  CHECK(gauss_from_string("5") == GaussRational(rat(5)));
  CHECK(gauss_from_string("3*i") == GaussRational(rat(0), rat(3)));
  CHECK(gauss_from_string("1/2+1/3*i") == GaussRational(rat(1, 2), rat(1, 3)));
  CHECK(to_string(GaussRational(rat(1), rat(-2))) == "1-2*i");
  CHECK(to_string(GaussRational(rat(4), rat(0))) == "4");
}

TEST_CASE("gauss field operations") {
  const GaussRational i(rat(0), rat(1));
  CHECK(i * i == GaussRational(rat(-1)));
  const GaussRational a(rat(1, 2), rat(3));
  CHECK(a / a == GaussRational(rat(1)));
  CHECK(a * a.conj() == GaussRational(Rational(a.re * a.re + a.im * a.im)));
  CHECK_THROWS_AS(a / GaussRational(), DomainError);
}

TEST_CASE("float formatting round-trips shortest form") {
  for (double d : {0.1, 1.0 / 3.0, -2.5e-17, 1e300, 0.0, 3.141592653589793}) {
    CHECK(std::stod(format_double(d)) == d);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("scalar arithmetic never mixes kinds") {
  const Scalar r(rat(1, 2)), g(GaussRational(rat(1), rat(1))), f(0.5);
  CHECK((r + r).rational() == rat(1));
  CHECK_THROWS_AS(r + g, KindError);
  CHECK_THROWS_AS(g * f, KindError);
  CHECK_THROWS_AS(r / Scalar(rat(0)), DomainError);
  CHECK(r.widened_to(ScalarKind::gauss).gauss() == GaussRational(rat(1, 2)));
  CHECK(f.widened_to(ScalarKind::cfloat64).cfloat64() == Complex(0.5, 0.0));
  CHECK_THROWS_AS(r.widened_to(ScalarKind::float64), KindError);
}

TEST_CASE("scalar parse respects the expected kind") {
  CHECK(Scalar::parse("2/3", ScalarKind::rational).rational() == rat(2, 3));
  CHECK(Scalar::parse("1+2*i", ScalarKind::gauss).gauss() == GaussRational(rat(1), rat(2)));
  CHECK(Scalar::parse("0.25", ScalarKind::float64).float64() == 0.25);
  CHECK_THROWS_AS(Scalar::parse("1+2*i", ScalarKind::rational), ParseError);
}

namespace {

Mat<Rational> rmat(int dim, std::initializer_list<long> vals) {
  Mat<Rational> m(dim);
  auto it = vals.begin();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rat(*it++);
  return m;
}

}  // namespace

TEST_CASE("kron dimensions, identity and associativity") {
  const auto a = rmat(2, {1, 2, 3, 4});
  const auto b = rmat(2, {0, 1, 1, 0});
  const auto c = rmat(2, {5, 0, 0, -1});
  CHECK(kron(a, b).dim() == 4);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  CHECK(kron(Mat<Rational>::identity(2), Mat<Rational>::identity(3)) ==
        Mat<Rational>::identity(6));
  // Mixed-product law on a spot sample.
  CHECK(kron(a, b) * kron(c, a) == kron(a * c, b * a));
}

TEST_CASE("twist matrix swaps tensor factors") {
  for (int d : {2, 3}) {
    const auto tw = twist_matrix<Rational>(d);
    CHECK(tw * tw == Mat<Rational>::identity(d * d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        CHECK(tw(j * d + i, i * d + j) == 1);
  }
}

TEST_CASE("leg lifts agree with their defining formulas") {
  const auto r = rmat(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1});
  const auto id = Mat<Rational>::identity(2);
  CHECK(lift(r, 2, Leg::l12) == kron(r, id));
  CHECK(lift(r, 2, Leg::l23) == kron(id, r));
  const auto p23 = kron(id, twist_matrix<Rational>(2));
  CHECK(lift(r, 2, Leg::l13) == p23 * kron(r, id) * p23);
  CHECK_THROWS_AS(lift(rmat(2, {1, 0, 0, 1}), 2, Leg::l12), DimError);
}

TEST_CASE("exact multiplication matches the naive triple loop") {
  Mat<Rational> a(3), b(3);
  long seed = 12345;
  auto next = [&] {
    seed = (seed * 1103515245 + 12345) % 2147483648;
    return rat(seed % 19 - 9, 1 + seed % 7);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = next();
      b(i, j) = next();
    }
  const auto fast = a * b;
  Mat<Rational> naive(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) naive(i, j) += a(i, k) * b(k, j);
  CHECK(fast == naive);
}

TEST_CASE("invertibility: exact elimination has no tolerance") {
  CHECK(invertible(Mat<Rational>::identity(3)));
  CHECK(invertible(rmat(2, {1, 2, 3, 4})));
  CHECK_FALSE(invertible(rmat(2, {1, 2, 2, 4})));
  CHECK_FALSE(invertible(Mat<Rational>(2)));
  // A tiny but nonzero exact pivot is still invertible.
  Mat<Rational> tiny(2);
  tiny(0, 0) = rat(1, 1000000000);
  tiny(1, 1) = rat(1);
  CHECK(invertible(tiny));
}

TEST_CASE("invertibility: float path uses a relative pivot floor") {
  Mat<double> ok(2);
  ok(0, 1) = 1.0;
  ok(1, 0) = -1.0;
  CHECK(invertible(ok));
  Mat<double> sing(2);
  sing(0, 0) = 1.0;
  sing(0, 1) = 1.0;
  sing(1, 0) = 1.0;
  sing(1, 1) = 1.0 + 1e-15;  // relatively singular
  CHECK_FALSE(invertible(sing));
  Mat<double> scaled(2);  // uniformly tiny is fine: the floor is relative
  scaled(0, 0) = 1e-20;
  scaled(1, 1) = 3e-20;
  CHECK(invertible(scaled));
}

TEST_CASE("matrix exponential: known values") {
  Mat<double> zero(3);
  CHECK(max_abs(mat_exp(zero) - Mat<double>::identity(3)) == 0.0);

  Mat<double> diag(2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  const auto e = mat_exp(diag);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-12);
  CHECK(std::abs(e(1, 1) - std::exp(2.0)) < 1e-12);
  CHECK(std::abs(e(0, 1)) == 0.0);

  Mat<double> nil(2);  // exp([[0,1],[0,0]]) = [[1,1],[0,1]]
  nil(0, 1) = 1.0;
  const auto en = mat_exp(nil);
  CHECK(std::abs(en(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(en(0, 1) - 1.0) < 1e-14);
  CHECK(std::abs(en(1, 0)) < 1e-14);

  Mat<double> bad(1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(mat_exp(bad), ValidationError);
  CHECK_THROWS_AS(mat_exp(AnyMatrix(Mat<Rational>::identity(2))), KindError);
}

TEST_CASE("norms carry the exactness flag") {
  const Norm nz = norm_of(AnyMatrix(Mat<Rational>(2)));
  CHECK(nz.exact);
  CHECK(nz.zero);
  const Norm nf = norm_of(AnyMatrix(Mat<double>(2)));
  CHECK_FALSE(nf.exact);
  Mat<Rational> m(1);
  m(0, 0) = rat(-7, 2);
  const Norm nm = norm_of(AnyMatrix(m));
  CHECK(nm.exact);
  CHECK_FALSE(nm.zero);
  CHECK(nm.magnitude == doctest::Approx(3.5));
}

TEST_CASE("any-matrix wrapper rejects kind clashes") {
  const AnyMatrix a{Mat<Rational>::identity(2)};
  const AnyMatrix b{Mat<double>::identity(2)};
  CHECK_THROWS_AS(mul(a, b), KindError);
  CHECK(a.at(0, 0).rational() == rat(1));
  CHECK(a.kind() == ScalarKind::rational);
  CHECK_THROWS_AS(a.as<double>(), KindError);
}
