#pragma once

#include <array>
#include <string>
#include <vector>

#include "ybx/matrix.hpp"

namespace ybx {

// Parameter of the antidiagonal complex matrix J: entries (i/alpha, i, i, alpha*i)
// from the top-right corner down.  J^2 = -I for every nonzero alpha, which is
// what makes cos/sin closed forms and the exponential identity work.
struct JSpec {
  double alpha = 1.0;
  void validate() const {
    if (alpha == 0.0 || !std::isfinite(alpha)) throw ValidationError("J: alpha must be nonzero");
  }
};

Mat<Complex> build_j(const JSpec& spec);

// R(x) = cos(x) I4 + sin(x) J  ( = e^{xJ} ).
Mat<Complex> colored_r(const JSpec& spec, double x);

// || e^{pi J} + I4 ||
Norm euler_check(const JSpec& spec);

// Max-entry norm of R12(x) R23(x+y) R12(y) - R23(y) R12(x+y) R23(x) on the
// triple tensor square (8x8).
Norm colored_residual(const JSpec& spec, double x, double y);

// || (R(x+h) - R(x-h)) / 2h - J R(x) ||  — the derivative law R' = J R.
Norm ode_residual(const JSpec& spec, double x, double h);

// Deterministic sample points in [-pi, pi]^2: a square grid first, then
// fixed Halton points; same list every run.
std::vector<std::pair<double, double>> colored_sample_points(int count);

// Three color-dependent coefficient functions alpha/beta/gamma(u,v) feeding
// the five-equation compatibility system; everything exact rational.
struct ColorTable {
  std::vector<Rational> colors;                // the grid axis, both arguments
  std::vector<Rational> alpha, beta, gamma;    // |colors|^2 entries, row-major
  void validate() const;
  Rational lookup(const std::vector<Rational>& grid, const Rational& u,
                  const Rational& v) const;
};

struct ColorFunctionTriple {
  enum class Kind : std::uint8_t { constant, table, named };
  Kind kind = Kind::constant;
  Rational const_alpha, const_beta, const_gamma;  // constant kind
  std::string name;                               // named kind
  ColorTable table;                               // table kind

  static ColorFunctionTriple constants(Rational a, Rational b, Rational g);
  static ColorFunctionTriple named(std::string n);  // zero | equal-sum | equal-product
};

// The five left-hand sides, transcribed term by term, no rearrangement.
std::array<Rational, 5> yb_system_residuals(const ColorFunctionTriple& fns, const Rational& u,
                                            const Rational& v, const Rational& w);

}  // namespace ybx
