#include "ybx/colored_yb.hpp"

#include <algorithm>
#include <cmath>

namespace ybx {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mat<Complex> build_j(const JSpec& spec) {
  spec.validate();
  Mat<Complex> j(4);
  j(0, 3) = Complex(0.0, 1.0 / spec.alpha);
  j(1, 2) = Complex(0.0, 1.0);
  j(2, 1) = Complex(0.0, 1.0);
  j(3, 0) = Complex(0.0, spec.alpha);
  return j;
}

Mat<Complex> colored_r(const JSpec& spec, double x) {
  const Mat<Complex> j = build_j(spec);
  Mat<Complex> r = Mat<Complex>::identity(4);
  const double c = std::cos(x), s = std::sin(x);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r(a, b) = Complex(c, 0.0) * r(a, b) + Complex(s, 0.0) * j(a, b);
  return r;
}

Norm euler_check(const JSpec& spec) {
  Mat<Complex> e = mat_exp(build_j(spec).scaled(Complex(kPi, 0.0)));
  return norm_of(e + Mat<Complex>::identity(4));
}

Norm colored_residual(const JSpec& spec, double x, double y) {
  const auto r12 = [&](double t) { return lift(colored_r(spec, t), 2, Leg::l12); };
  const auto r23 = [&](double t) { return lift(colored_r(spec, t), 2, Leg::l23); };
  const Mat<Complex> lhs = r12(x) * r23(x + y) * r12(y);
  const Mat<Complex> rhs = r23(y) * r12(x + y) * r23(x);
  return norm_of(lhs - rhs);
}

Norm ode_residual(const JSpec& spec, double x, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("ode: h must be positive");
  const Mat<Complex> num = (colored_r(spec, x + h) - colored_r(spec, x - h))
                               .scaled(Complex(1.0 / (2.0 * h), 0.0));
  return norm_of(num - build_j(spec) * colored_r(spec, x));
}

std::vector<std::pair<double, double>> colored_sample_points(int count) {
  if (count < 0) throw DomainError("sample count must be nonnegative");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(count);
  const int side = static_cast<int>(std::floor(std::sqrt(static_cast<double>(count))));
  if (side >= 1) {
    for (int i = 0; i < side && static_cast<int>(pts.size()) < count; ++i)
      for (int j = 0; j < side && static_cast<int>(pts.size()) < count; ++j) {
        const double fx = side == 1 ? 0.5 : static_cast<double>(i) / (side - 1);
        const double fy = side == 1 ? 0.5 : static_cast<double>(j) / (side - 1);
        pts.emplace_back(-kPi + 2.0 * kPi * fx, -kPi + 2.0 * kPi * fy);
      }
  }
  auto halton = [](int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
      f /= base;
      r += f * (i % base);
    }
    return r;
  };
  for (int k = 1; static_cast<int>(pts.size()) < count; ++k)
    pts.emplace_back(-kPi + 2.0 * kPi * halton(k, 2), -kPi + 2.0 * kPi * halton(k, 3));
  return pts;
}

void ColorTable::validate() const {
  const size_t c = colors.size();
  if (c == 0) throw ValidationError("color table: empty color list");
  if (alpha.size() != c * c || beta.size() != c * c || gamma.size() != c * c)
    throw ValidationError("color table: grids must have |colors|^2 entries");
  for (size_t i = 0; i < c; ++i)
    for (size_t j = i + 1; j < c; ++j)
      if (colors[i] == colors[j]) throw ValidationError("color table: duplicate color");
}

Rational ColorTable::lookup(const std::vector<Rational>& grid, const Rational& u,
                            const Rational& v) const {
  auto find = [&](const Rational& x) -> size_t {
    for (size_t i = 0; i < colors.size(); ++i)
      if (colors[i] == x) return i;
    throw DomainError("color " + to_string(x) + " not in table");
  };
  return grid[find(u) * colors.size() + find(v)];
}

ColorFunctionTriple ColorFunctionTriple::constants(Rational a, Rational b, Rational g) {
  ColorFunctionTriple t;
  t.kind = Kind::constant;
  t.const_alpha = std::move(a);
  t.const_beta = std::move(b);
  t.const_gamma = std::move(g);
  return t;
}

ColorFunctionTriple ColorFunctionTriple::named(std::string n) {
  if (n != "zero" && n != "equal-sum" && n != "equal-product")
    throw ParseError("unknown color-function name '" + n + "'");
  ColorFunctionTriple t;
  t.kind = Kind::named;
  t.name = std::move(n);
  return t;
}

std::array<Rational, 5> yb_system_residuals(const ColorFunctionTriple& fns, const Rational& u,
                                            const Rational& v, const Rational& w) {
  auto eval = [&](char which, const Rational& s, const Rational& t) -> Rational {
    switch (fns.kind) {
      case ColorFunctionTriple::Kind::constant:
        return which == 'a' ? fns.const_alpha : which == 'b' ? fns.const_beta : fns.const_gamma;
      case ColorFunctionTriple::Kind::named: {
        if (fns.name == "zero") return Rational(0);
        if (fns.name == "equal-sum") return s + t;
        return s * t;  // equal-product
      }
      case ColorFunctionTriple::Kind::table: {
        fns.table.validate();
        const auto& grid = which == 'a'   ? fns.table.alpha
                           : which == 'b' ? fns.table.beta
                                          : fns.table.gamma;
        return fns.table.lookup(grid, s, t);
      }
    }
    throw DomainError("bad color function kind");
  };

  const Rational a_uv = eval('a', u, v), b_uv = eval('b', u, v), g_uv = eval('g', u, v);
  const Rational a_vw = eval('a', v, w), b_vw = eval('b', v, w), g_vw = eval('g', v, w);
  const Rational a_uw = eval('a', u, w), b_uw = eval('b', u, w), g_uw = eval('g', u, w);

  std::array<Rational, 5> r;
  r[0] = (b_vw - g_vw) * (a_uv * b_uw - a_uw * b_uv) +
         (a_uv - g_uv) * (a_vw * b_uw - a_uw * b_vw);
  r[1] = b_vw * (b_uv - g_uv) * (a_uw - g_uw) +
         (a_vw - g_vw) * (b_uw * g_uv - b_uv * g_uw);
  r[2] = a_uv * b_vw * (a_uw - g_uw) + a_vw * g_uw * (g_uv - a_uv) +
         g_vw * (a_uv * g_uw - a_uw * g_uv);
  r[3] = a_uv * b_vw * (b_uw - g_uw) + b_vw * g_uw * (g_uv - b_uv) +
         g_vw * (b_uv * g_uw - b_uw * g_uv);
  r[4] = a_uv * (a_vw - g_vw) * (b_uw - g_uw) +
         (b_uv - g_uv) * (a_uw * g_vw - a_vw * g_uw);
  return r;
}

}  // namespace ybx
