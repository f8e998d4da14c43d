#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ybx/transc.hpp"

using namespace ybx;

TEST_CASE("rows 1..5 carry the exact frozen values") {
  const Thm41Result res = thm41_check(5);
  REQUIRE(res.rows.size() == 5);
  const Rational lhs[] = {rat(1), rat(5, 4), rat(49, 36), rat(205, 144), rat(5269, 3600)};
  const Rational rhs[] = {rat(4, 3), rat(3, 2), rat(128, 81), rat(625, 384), rat(5184, 3125)};
  for (int i = 0; i < 5; ++i) {
    CHECK(res.rows[i].n == static_cast<unsigned long>(i + 1));
    CHECK(res.rows[i].lhs == lhs[i]);
    CHECK(res.rows[i].rhs == rhs[i]);
    CHECK(res.rows[i].verdict);
  }
  CHECK(res.all_true);
  CHECK(res.replay_consistent);
}

TEST_CASE("printed decimals match the source table to its precision") {
  const Thm41Result res = thm41_check(5);
  CHECK(rational_decimal(res.rows[0].lhs, 4) == "1.0000");
  CHECK(rational_decimal(res.rows[1].lhs, 2) == "1.25");
  CHECK(rational_decimal(res.rows[2].lhs, 4) == "1.3611");
  CHECK(rational_decimal(res.rows[3].lhs, 5) == "1.42361");
  CHECK(rational_decimal(res.rows[4].lhs, 5) == "1.46361");
  CHECK(rational_decimal(res.rows[0].rhs, 4) == "1.3333");
  CHECK(rational_decimal(res.rows[1].rhs, 1) == "1.5");
  CHECK(rational_decimal(res.rows[2].rhs, 6) == "1.580246");
  CHECK(rational_decimal(res.rows[3].rhs, 4) == "1.6276");
  CHECK(rational_decimal(res.rows[4].rhs, 5) == "1.65888");
}

TEST_CASE("rational_decimal truncates toward zero") {
  CHECK(rational_decimal(rat(1, 3), 6) == "0.333333");
  CHECK(rational_decimal(rat(-22, 7), 6) == "-3.142857");
  CHECK(rational_decimal(rat(2), 3) == "2.000");
  CHECK(rational_decimal(rat(1999, 1000), 2) == "1.99");
  CHECK(rational_decimal(rat(7), 0) == "7");
}

TEST_CASE("both sides increase strictly and stay under the basel cap") {
  const Thm41Result res = thm41_check(2000);
  CHECK(res.all_true);
  CHECK(res.basel_cap == rat(329, 200));
  for (size_t i = 0; i + 1 < res.rows.size(); ++i) {
    CHECK(res.rows[i].lhs < res.rows[i + 1].lhs);
    CHECK(res.rows[i].rhs < res.rows[i + 1].rhs);
  }
  for (const auto& row : res.rows) CHECK(row.lhs < res.basel_cap);
}

TEST_CASE("proof replay agrees with direct comparison up to n=200") {
  const Thm41Result res = thm41_check(200);
  CHECK(res.replay_consistent);
  CHECK(res.all_true);
}

TEST_CASE("directed-rounding bounds genuinely enclose pi^2/6") {
  const Thm41Result res = thm41_check(5);
  CHECK(res.pi26_lo < res.pi26_hi);
  // Width below 1e-40: fifty digits of directed rounding.
  CHECK(Rational(res.pi26_hi - res.pi26_lo) < rat(1, 1000000000) * rat(1, 1000000000) *
                                                  rat(1, 1000000000) * rat(1, 1000000000) *
                                                  rat(1, 10000));
  CHECK(res.pi26_hi < res.basel_cap);
  // The enclosure rounds to the known digits 1.6449340668...
  CHECK(rational_decimal(res.pi26_lo, 10) == "1.6449340668");
  CHECK(rational_decimal(res.pi26_hi, 10) == "1.6449340668");
}

TEST_CASE("margin table: frozen signs and the printed leading value") {
  const auto ms = transcendental_margins();
  REQUIRE(ms.size() == 5);
  CHECK(ms[0].name == "pi^2 - 4e");
  CHECK(std::abs(ms[0].value - (-1.003522913)) < 5e-10);
  CHECK(ms[0].sign == -1);
  const int expected_signs[] = {-1, 1, 1, 1, 1};
  for (int i = 0; i < 5; ++i) {
    CHECK(ms[i].sign == expected_signs[i]);
    CHECK(ms[i].sign_stable);
    CHECK_FALSE(ms[i].value_hp.empty());
    // float64 and the high-precision evaluation agree to float accuracy.
    CHECK(std::abs(ms[i].value - std::stod(ms[i].value_hp)) <
          1e-9 * (1.0 + std::abs(ms[i].value)));
  }
  // The parabola minimum is e - pi^2/4 in closed form.
  const double e = std::exp(1.0), pi = std::acos(-1.0);
  CHECK(ms[2].value == doctest::Approx(e - pi * pi / 4).epsilon(1e-12));
  // Exploration rows are labeled as evidence, not proof.
  CHECK(ms[3].note.find("evidence") != std::string::npos);
  CHECK(ms[4].note.find("evidence") != std::string::npos);
}

TEST_CASE("margins are deterministic") {
  const auto a = transcendental_margins();
  const auto b = transcendental_margins();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].value_hp == b[i].value_hp);
  }
}
