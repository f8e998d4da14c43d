#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

// Conventions, fixed once for the whole project:
//  * matrices act on column vectors, so in a product A*B the factor B is
//    applied first;
//  * the basis of k^d (x) k^d is ordered e_i (x) e_j  <->  index i*d + j
//    (row-major), and kron() follows that ordering;
//  * an operator "on legs 1,2" of a triple tensor product is kron(r, I),
//    "on legs 2,3" is kron(I, r), and "on legs 1,3" is the conjugate of
//    kron(r, I) by the middle-and-last swap.
// Everything downstream (residuals, transport between equation forms, the
// lookup-table checkers) is calibrated against these three choices.

template <class T>
struct ScalarOps;  // per-entry-type glue: exactness flag + |.| as double

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static double abs(const Rational& v) { return std::fabs(to_double(v)); }
  static std::string str(const Rational& v) { return to_string(v); }
};
template <>
struct ScalarOps<GaussRational> {
  static constexpr bool exact = true;
  static double abs(const GaussRational& v) {
    return std::hypot(to_double(v.re), to_double(v.im));
  }
  static std::string str(const GaussRational& v) { return to_string(v); }
};
template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double abs(double v) { return std::fabs(v); }
  static std::string str(double v) { return format_double(v); }
};
template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  static double abs(Complex v) { return std::abs(v); }
  static std::string str(Complex v) { return format_complex(v); }
};

// Square matrix, row-major.
template <class T>
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), e_(static_cast<size_t>(n) * n, T{}) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = one();
    return m;
  }

  int dim() const { return n_; }
  T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<T>& entries() const { return e_; }
  std::vector<T>& entries() { return e_; }

  bool operator==(const Mat& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat r(n_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat r(n_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Mat operator*(const Mat& o) const;

  Mat scaled(const T& s) const {
    Mat r(n_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
  }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!(v == T{})) return false;
    return true;
  }

  // First entry differing from zero, scanning row-major.
  std::optional<std::tuple<int, int, T>> first_nonzero() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!((*this)(i, j) == T{})) return std::tuple{i, j, (*this)(i, j)};
    return std::nullopt;
  }

 private:
  static T one() {
    if constexpr (std::is_same_v<T, Complex>)
      return Complex(1.0, 0.0);
    else
      return T(1);
  }
  void check_same(const Mat& o) const {
    if (n_ != o.n_) throw DimError("matrix dimension mismatch");
  }

  int n_ = 0;
  std::vector<T> e_;
};

namespace detail {

// Exact-rational product: pull out one common denominator per factor, do the
// inner loops on integers, reattach the denominators at the end.  Way faster
// than per-entry mpq arithmetic once matrices reach kron-of-kron sizes.
inline Mat<Rational> mul_rational(const Mat<Rational>& a, const Mat<Rational>& b) {
  const int n = a.dim();
  auto scale = [n](const Mat<Rational>& m, std::vector<mpz_class>& out, mpz_class& den) {
    den = 1;
    for (const auto& v : m.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    out.resize(static_cast<size_t>(n) * n);
    size_t k = 0;
    mpz_class f;
    for (const auto& v : m.entries()) {
      mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
      out[k++] = mpz_class(v.get_num()) * f;
    }
  };
  std::vector<mpz_class> ia, ib;
  mpz_class da, db;
  scale(a, ia, da);
  scale(b, ib, db);
  const mpz_class dd = da * db;
  Mat<Rational> c(n);
  mpz_class acc, t;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc = 0;
      const size_t ra = static_cast<size_t>(i) * n;
      for (int k = 0; k < n; ++k) {
        const mpz_class& x = ia[ra + k];
        if (x == 0) continue;
        t = x * ib[static_cast<size_t>(k) * n + j];
        acc += t;
      }
      Rational v(acc, dd);
      v.canonicalize();
      c(i, j) = v;
    }
  }
  return c;
}

}  // namespace detail

template <class T>
Mat<T> Mat<T>::operator*(const Mat& o) const {
  check_same(o);
  if constexpr (std::is_same_v<T, Rational>) {
    return detail::mul_rational(*this, o);
  } else {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T{}) continue;
        for (int j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
}

template <class T>
double max_abs(const Mat<T>& m) {
  double best = 0.0;
  for (const auto& v : m.entries()) best = std::max(best, ScalarOps<T>::abs(v));
  return best;
}

// Residual summary: either "identically zero, proven exactly" or a magnitude.
struct Norm {
  bool exact = false;      // computed with exact scalars
  bool zero = false;       // exact && zero  =>  a proof, not a small number
  double magnitude = 0.0;  // max |entry| (for exact kinds: double approximation)

  static Norm exact_of(bool is_zero, double mag) { return {true, is_zero, mag}; }
  static Norm approx_of(double mag) { return {false, mag == 0.0, mag}; }
};

template <class T>
Norm norm_of(const Mat<T>& m) {
  if constexpr (ScalarOps<T>::exact)
    return Norm::exact_of(m.is_zero(), max_abs(m));
  else
    return Norm::approx_of(max_abs(m));
}

// --- tensor plumbing ---

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
  const int na = a.dim(), nb = b.dim();
  Mat<T> c(na * nb);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1) {
      const T& v = a(i1, j1);
      if (v == T{}) continue;
      for (int i2 = 0; i2 < nb; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          c(i1 * nb + i2, j1 * nb + j2) = v * b(i2, j2);
    }
  return c;
}

// Flip of the two tensor factors of k^d (x) k^d.
template <class T>
Mat<T> twist_matrix(int d) {
  Mat<T> t(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t(j * d + i, i * d + j) = [] {
      if constexpr (std::is_same_v<T, Complex>)
        return Complex(1.0, 0.0);
      else
        return T(1);
    }();
  return t;
}

enum class Leg : std::uint8_t { l12, l23, l13 };

const char* leg_name(Leg l);
Leg leg_from_name(std::string_view s);  // "12" | "23" | "13"

template <class T>
Mat<T> lift(const Mat<T>& r, int d, Leg leg) {
  if (r.dim() != d * d) throw DimError("lift: operator is not d^2 x d^2");
  const Mat<T> id = Mat<T>::identity(d);
  switch (leg) {
    case Leg::l12: return kron(r, id);
    case Leg::l23: return kron(id, r);
    case Leg::l13: {
      const Mat<T> p23 = kron(id, twist_matrix<T>(d));
      return p23 * kron(r, id) * p23;
    }
  }
  throw DimError("lift: bad leg");
}

// --- exactness-aware invertibility ---

// Exact kinds: honest Gaussian elimination over the field, no tolerances.
// Float kinds: LU with partial pivoting; singular means some pivot falls
// below 1e-9 relative to the largest input entry.
inline constexpr double kFloatPivotRel = 1e-9;

template <class T>
bool invertible(Mat<T> m) {
  const int n = m.dim();
  if (n == 0) return true;
  if constexpr (ScalarOps<T>::exact) {
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!(m(r, col) == T{})) {
          piv = r;
          break;
        }
      if (piv < 0) return false;
      if (piv != col)
        for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      for (int r = col + 1; r < n; ++r) {
        if (m(r, col) == T{}) continue;
        T f = m(r, col) / m(col, col);
        for (int j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
      }
    }
    return true;
  } else {
    const double floor = kFloatPivotRel * max_abs(m);
    for (int col = 0; col < n; ++col) {
      int piv = col;
      double best = ScalarOps<T>::abs(m(col, col));
      for (int r = col + 1; r < n; ++r) {
        double a = ScalarOps<T>::abs(m(r, col));
        if (a > best) {
          best = a;
          piv = r;
        }
      }
      if (best <= floor) return false;
      if (piv != col)
        for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      for (int r = col + 1; r < n; ++r) {
        T f = m(r, col) / m(col, col);
        for (int j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
      }
    }
    return true;
  }
}

// --- matrix exponential (float kinds only) ---

inline constexpr double kMatExpTol = 1e-12;

template <class T>
Mat<T> mat_exp(const Mat<T>& a) {
  static_assert(!ScalarOps<T>::exact, "mat_exp is defined for float kinds");
  for (const auto& v : a.entries())
    if (!std::isfinite(ScalarOps<T>::abs(v)))
      throw ValidationError("mat_exp: non-finite entry");
  const int n = a.dim();
  double nrm = max_abs(a) * n;  // cheap overestimate of an operator norm
  int squarings = 0;
  while (nrm > 0.5 && squarings < 64) {
    nrm *= 0.5;
    ++squarings;
  }
  Mat<T> b = a;
  {
    const double s = std::ldexp(1.0, -squarings);
    for (auto& v : b.entries()) v *= [&] {
      if constexpr (std::is_same_v<T, Complex>)
        return Complex(s, 0.0);
      else
        return s;
    }();
  }
  Mat<T> sum = Mat<T>::identity(n);
  Mat<T> term = Mat<T>::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = term * b;
    const double inv = 1.0 / k;
    for (auto& v : term.entries()) v *= [&] {
      if constexpr (std::is_same_v<T, Complex>)
        return Complex(inv, 0.0);
      else
        return inv;
    }();
    sum = sum + term;
    if (max_abs(term) < kMatExpTol) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// --- kind-erased wrapper for the CLI / JSON boundary ---

class AnyMatrix {
 public:
  AnyMatrix() : v_(Mat<Rational>()) {}
  AnyMatrix(Mat<Rational> m) : v_(std::move(m)) {}
  AnyMatrix(Mat<GaussRational> m) : v_(std::move(m)) {}
  AnyMatrix(Mat<double> m) : v_(std::move(m)) {}
  AnyMatrix(Mat<Complex> m) : v_(std::move(m)) {}

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
  int dim() const {
    return std::visit([](const auto& m) { return m.dim(); }, v_);
  }

  template <class T>
  const Mat<T>& as() const {
    if (auto* p = std::get_if<Mat<T>>(&v_)) return *p;
    throw KindError(std::string("matrix kind is ") + kind_name(kind()));
  }

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), v_);
  }

  bool operator==(const AnyMatrix& o) const { return v_ == o.v_; }

  Scalar at(int i, int j) const {
    return visit([&](const auto& m) { return Scalar(m(i, j)); });
  }

 private:
  std::variant<Mat<Rational>, Mat<GaussRational>, Mat<double>, Mat<Complex>> v_;
};

AnyMatrix kron(const AnyMatrix& a, const AnyMatrix& b);
AnyMatrix lift(const AnyMatrix& r, int d, Leg leg);
AnyMatrix mul(const AnyMatrix& a, const AnyMatrix& b);
AnyMatrix mat_exp(const AnyMatrix& a);  // KindError unless float/cfloat
Norm norm_of(const AnyMatrix& m);
AnyMatrix twist_any(ScalarKind k, int d);

}  // namespace ybx
