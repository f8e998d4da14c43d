#pragma once

#include <string>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

// One row of the harmonic-square bound: sum_{k<=n} 1/k^2  <  (2/3)((n+1)/n)^n.
struct BoundRow {
  unsigned long n = 0;
  Rational lhs, rhs;
  bool verdict = false;  // exact lhs < rhs
};

struct Thm41Result {
  std::vector<BoundRow> rows;
  bool all_true = false;
  // Proof-replay path: direct comparison for n <= 5, then the chain
  //   lhs(n) < lo <= pi^2/6 < hi < 329/200 <= rhs(5) <= rhs(n)
  // with (lo, hi) certified by directed rounding.  replay_consistent says the
  // replay verdict agreed with the direct exact verdict on every row where
  // both apply.
  bool replay_consistent = false;
  Rational basel_cap;       // 329/200
  Rational pi26_lo, pi26_hi;
};

Thm41Result thm41_check(unsigned long n_max);

// Certified enclosure lo < pi^2/6 < hi at the requested decimal precision.
std::pair<Rational, Rational> pi_squared_over_six_bounds(int decimal_digits);

// Truncated decimal expansion (toward zero), e.g. (205/144, 5) -> "1.42361".
std::string rational_decimal(const Rational& r, int frac_digits);

struct MarginReport {
  std::string name;
  double value = 0.0;        // float64 evaluation
  std::string value_hp;      // high-precision decimal (50 significant digits)
  int sign = 0;              // sign at 50 digits
  bool sign_stable = false;  // same sign at float64, 50 and 100 digits
  std::string note;          // provenance: closed form vs sampled evidence
};

inline constexpr double kQuadTol = 1e-12;

// The margin table: pi^2-4e, pi^3-4e^2, the parabola minimum e-pi^2/4, the
// grid-sampled modulus bound, and the Gaussian integral gap on the default
// (a,b) sample pairs (adaptive Simpson at kQuadTol).
std::vector<MarginReport> transcendental_margins();

std::vector<std::pair<Rational, Rational>> gaussian_gap_default_pairs();

}  // namespace ybx
