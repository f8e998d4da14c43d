#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ybx/errors.hpp"

namespace ybx {

// The exact scalar tower.  Rational is GMP-backed and always kept canonical
// (reduced, positive denominator), so operator== is value equality and the
// string form is unique — that is what makes serialized output byte-stable.
using Rational = mpq_class;
using Complex = std::complex<double>;

Rational rational_from_string(std::string_view s);  // "p", "-p", "p/q"
std::string to_string(const Rational& r);
double to_double(const Rational& r);
Rational rational_from_double(double x);  // exact (doubles are dyadic)

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Q(i).  A plain pair of rationals with field operations; nothing clever.
struct GaussRational {
  Rational re, im;

  GaussRational() : re(0), im(0) {}
  GaussRational(Rational r) : re(std::move(r)), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
  GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
  GaussRational operator*(const GaussRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRational operator/(const GaussRational& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw DomainError("gauss division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

  GaussRational conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussRational gauss_from_string(std::string_view s);  // "p/q+r/s*i", "p/q", "r/s*i"
std::string to_string(const GaussRational& g);
Complex to_complex(const GaussRational& g);

enum class ScalarKind : std::uint8_t { rational, gauss, float64, cfloat64 };

const char* kind_name(ScalarKind k);
ScalarKind kind_from_name(std::string_view name);  // throws ParseError
inline bool kind_is_exact(ScalarKind k) {
  return k == ScalarKind::rational || k == ScalarKind::gauss;
}

// Tagged scalar used at API boundaries (CLI parameters, JSON entries, report
// witnesses).  Arithmetic never mixes kinds; promotion is the caller's job.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(GaussRational g) : v_(std::move(g)) {}
  Scalar(double d) : v_(d) {}
  Scalar(Complex c) : v_(c) {}

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }

  const Rational& rational() const { return get<Rational>("rational"); }
  const GaussRational& gauss() const { return get<GaussRational>("gauss"); }
  double float64() const { return get<double>("float"); }
  Complex cfloat64() const { return get<Complex>("cfloat"); }

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  // Unique text form for exact kinds; shortest round-trip form for floats.
  std::string str() const;

  // Parse with an expected kind, e.g. from a typed JSON matrix.
  static Scalar parse(std::string_view text, ScalarKind k);

  // Lossless widening within the exact family / the float family.
  Scalar widened_to(ScalarKind k) const;

 private:
  template <class T>
  const T& get(const char* want) const {
    if (auto* p = std::get_if<T>(&v_)) return *p;
    throw KindError(std::string("scalar is ") + kind_name(kind()) + ", wanted " + want);
  }
  std::variant<Rational, GaussRational, double, Complex> v_;
};

std::string format_double(double d);    // shortest round-trip
std::string format_complex(Complex c);  // "re+im*i" with round-trip parts

}  // namespace ybx
