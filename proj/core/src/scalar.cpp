#include "ybx/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ybx {

namespace {

bool valid_rational_text(std::string_view s) {
  // [-+]?digits(/digits)?  — no spaces, no empty parts.
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational rational_from_string(std::string_view s) {
  if (!valid_rational_text(s))
    throw ParseError("bad rational '" + std::string(s) + "' (want p or p/q)");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw ParseError("bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double has no rational value");
  Rational r(x);
  r.canonicalize();
  return r;
}

GaussRational gauss_from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty gauss scalar");
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
    std::string_view body = s.substr(0, s.size() - 2);
    // Split "<re><+|-><im>" at the last sign that follows a digit; if there is
    // none the whole body is the imaginary coefficient.
    for (size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') &&
          std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
        Rational re = rational_from_string(body.substr(0, i));
        Rational im = rational_from_string(body.substr(i + 1));
        if (body[i] == '-') im = -im;
        return {re, im};
      }
    }
    return {Rational(0), rational_from_string(body)};
  }
  return {rational_from_string(s), Rational(0)};
}

std::string to_string(const GaussRational& g) {
  if (g.im == 0) return to_string(g.re);
  std::string out = to_string(g.re);
  if (g.im < 0)
    out += "-" + to_string(Rational(-g.im)) + "*i";
  else
    out += "+" + to_string(g.im) + "*i";
  return out;
}

Complex to_complex(const GaussRational& g) { return {to_double(g.re), to_double(g.im)}; }

const char* kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::rational: return "rational";
    case ScalarKind::gauss: return "gauss";
    case ScalarKind::float64: return "float";
    case ScalarKind::cfloat64: return "cfloat";
  }
  return "?";
}

ScalarKind kind_from_name(std::string_view name) {
  if (name == "rational") return ScalarKind::rational;
  if (name == "gauss") return ScalarKind::gauss;
  if (name == "float") return ScalarKind::float64;
  if (name == "cfloat") return ScalarKind::cfloat64;
  throw ParseError("unknown scalar kind '" + std::string(name) + "'");
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::rational: return rational() == 0;
    case ScalarKind::gauss: return gauss().is_zero();
    case ScalarKind::float64: return float64() == 0.0;
    case ScalarKind::cfloat64: return cfloat64() == Complex(0.0, 0.0);
  }
  return false;
}

bool Scalar::operator==(const Scalar& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case ScalarKind::rational: return rational() == o.rational();
    case ScalarKind::gauss: return gauss() == o.gauss();
    case ScalarKind::float64: return float64() == o.float64();
    case ScalarKind::cfloat64: return cfloat64() == o.cfloat64();
  }
  return false;
}

namespace {
[[noreturn]] void mixed(const Scalar& a, const Scalar& b) {
  throw KindError(std::string("scalar kind mismatch: ") + kind_name(a.kind()) + " vs " +
                  kind_name(b.kind()));
}
}  // namespace

#define YBX_SCALAR_BINOP(op)                                                      \
  Scalar Scalar::operator op(const Scalar& o) const {                             \
    if (kind() != o.kind()) mixed(*this, o);                                      \
    switch (kind()) {                                                             \
      case ScalarKind::rational: return Scalar(Rational(rational() op o.rational())); \
      case ScalarKind::gauss: return Scalar(gauss() op o.gauss());                \
      case ScalarKind::float64: return Scalar(float64() op o.float64());          \
      case ScalarKind::cfloat64: return Scalar(cfloat64() op o.cfloat64());       \
    }                                                                             \
    mixed(*this, o);                                                              \
  }

YBX_SCALAR_BINOP(+)
YBX_SCALAR_BINOP(-)
YBX_SCALAR_BINOP(*)
#undef YBX_SCALAR_BINOP

Scalar Scalar::operator/(const Scalar& o) const {
  if (kind() != o.kind()) mixed(*this, o);
  if (kind_is_exact(kind()) && o.is_zero()) throw DomainError("scalar division by zero");
  switch (kind()) {
    case ScalarKind::rational: return Scalar(Rational(rational() / o.rational()));
    case ScalarKind::gauss: return Scalar(gauss() / o.gauss());
    case ScalarKind::float64: return Scalar(float64() / o.float64());
    case ScalarKind::cfloat64: return Scalar(cfloat64() / o.cfloat64());
  }
  mixed(*this, o);
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::rational: return Scalar(Rational(-rational()));
    case ScalarKind::gauss: return Scalar(-gauss());
    case ScalarKind::float64: return Scalar(-float64());
    case ScalarKind::cfloat64: return Scalar(-cfloat64());
  }
  return *this;
}

std::string format_double(double d) {
  char buf[64];
  // Shortest form that round-trips: try increasing precision.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, d);
    double back = 0;
    std::sscanf(buf, "%lf", &back);
    if (back == d || (std::isnan(back) && std::isnan(d))) return buf;
  }
  return buf;
}

std::string format_complex(Complex c) {
  std::string out = format_double(c.real());
  double im = c.imag();
  if (std::signbit(im) && !std::isnan(im))
    out += "-" + format_double(-im) + "*i";
  else
    out += "+" + format_double(im) + "*i";
  return out;
}

std::string Scalar::str() const {
  switch (kind()) {
    case ScalarKind::rational: return to_string(rational());
    case ScalarKind::gauss: return to_string(gauss());
    case ScalarKind::float64: return format_double(float64());
    case ScalarKind::cfloat64: return format_complex(cfloat64());
  }
  return "?";
}

Scalar Scalar::parse(std::string_view text, ScalarKind k) {
  switch (k) {
    case ScalarKind::rational: return Scalar(rational_from_string(text));
    case ScalarKind::gauss: return Scalar(gauss_from_string(text));
    case ScalarKind::float64: {
      std::string s(text);
      char* end = nullptr;
      double d = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size() || s.empty())
        throw ParseError("bad float '" + s + "'");
      return Scalar(d);
    }
    case ScalarKind::cfloat64: {
      // Reuse the gauss splitter on float parts.
      std::string s(text);
      if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string body = s.substr(0, s.size() - 2);
        for (size_t i = body.size(); i-- > 1;) {
          if ((body[i] == '+' || body[i] == '-') &&
              (std::isdigit(static_cast<unsigned char>(body[i - 1])) ||
               body[i - 1] == '.')) {
            double re = Scalar::parse(body.substr(0, i), ScalarKind::float64).float64();
            double im = Scalar::parse(body.substr(i + 1), ScalarKind::float64).float64();
            if (body[i] == '-') im = -im;
            return Scalar(Complex(re, im));
          }
        }
        double im = Scalar::parse(body, ScalarKind::float64).float64();
        return Scalar(Complex(0.0, im));
      }
      return Scalar(Complex(Scalar::parse(s, ScalarKind::float64).float64(), 0.0));
    }
  }
  throw ParseError("bad scalar kind");
}

Scalar Scalar::widened_to(ScalarKind k) const {
  if (k == kind()) return *this;
  if (kind() == ScalarKind::rational && k == ScalarKind::gauss)
    return Scalar(GaussRational(rational()));
  if (kind() == ScalarKind::float64 && k == ScalarKind::cfloat64)
    return Scalar(Complex(float64(), 0.0));
  throw KindError(std::string("cannot widen ") + kind_name(kind()) + " to " + kind_name(k));
}

}  // namespace ybx
