#include "ybx/transc.hpp"

#include <mpfr.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace ybx {

namespace {

Rational rational_of_mpfr(mpfr_t x) {  // exact: every finite binary float is rational
  mpz_class z;
  const long e = mpfr_get_z_2exp(z.get_mpz_t(), x);
  Rational r(z);
  if (e >= 0) {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    r = Rational(p);
  } else {
    mpz_class d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    r = Rational(z, d);
  }
  r.canonicalize();
  return r;
}

Rational rhs_bound(unsigned long n) {  // (2/3) ((n+1)/n)^n
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), n + 1, n);
  mpz_ui_pow_ui(den.get_mpz_t(), n, n);
  Rational r(num * 2, den * 3);
  r.canonicalize();
  return r;
}

}  // namespace

std::pair<Rational, Rational> pi_squared_over_six_bounds(int decimal_digits) {
  if (decimal_digits < 1) throw DomainError("precision must be positive");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(decimal_digits * 3.33) + 64;
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);

  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_sqr(lo, lo, MPFR_RNDD);  // pi > 0, so squaring keeps the direction
  mpfr_div_ui(lo, lo, 6, MPFR_RNDD);

  mpfr_const_pi(hi, MPFR_RNDU);
  mpfr_sqr(hi, hi, MPFR_RNDU);
  mpfr_div_ui(hi, hi, 6, MPFR_RNDU);

  std::pair<Rational, Rational> out{rational_of_mpfr(lo), rational_of_mpfr(hi)};
  mpfr_clear(lo);
  mpfr_clear(hi);
  if (!(out.first < out.second)) throw DomainError("directed rounding produced no enclosure");
  return out;
}

Thm41Result thm41_check(unsigned long n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  Thm41Result res;
  res.basel_cap = rat(329, 200);
  std::tie(res.pi26_lo, res.pi26_hi) = pi_squared_over_six_bounds(50);

  res.rows.reserve(n_max);
  Rational lhs(0);
  res.all_true = true;
  for (unsigned long n = 1; n <= n_max; ++n) {
    Rational term(mpz_class(1), mpz_class(n) * n);
    term.canonicalize();
    lhs += term;
    BoundRow row{n, lhs, rhs_bound(n), false};
    row.verdict = row.lhs < row.rhs;
    res.all_true = res.all_true && row.verdict;
    res.rows.push_back(std::move(row));
  }

  // Replay the printed argument wherever it applies and insist it agrees.
  res.replay_consistent = res.pi26_hi < res.basel_cap;
  const Rational rhs5 = rhs_bound(5);
  res.replay_consistent = res.replay_consistent && res.basel_cap <= rhs5;
  for (const auto& row : res.rows) {
    if (row.n < 5) continue;
    const bool replay = (row.lhs < res.pi26_lo) && (rhs5 <= row.rhs);
    if (replay != row.verdict) res.replay_consistent = false;
  }
  return res;
}

std::string rational_decimal(const Rational& r, int frac_digits) {
  if (frac_digits < 0) throw DomainError("frac_digits must be >= 0");
  const bool neg = r < 0;
  mpz_class num = abs(mpz_class(r.get_num()));
  const mpz_class den = r.get_den();
  mpz_class ip = num / den;
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (frac_digits == 0) return out;
  out += '.';
  mpz_class rem = num % den;
  for (int i = 0; i < frac_digits; ++i) {
    rem *= 10;
    out += (mpz_class(rem / den)).get_str();
    rem %= den;
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> gaussian_gap_default_pairs() {
  return {{rat(0), rat(1)}, {rat(-1), rat(1)}, {rat(0), rat(2)}, {rat(1), rat(3)},
          {rat(-2), rat(-1)}};
}

namespace {

template <class Real>
Real simpson_slice(Real a, Real b, Real fa, Real fm, Real fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

template <class Real, class F>
Real adapt(const F& f, Real a, Real b, Real fa, Real fm, Real fb, Real whole, Real tol,
           int depth) {
  if (depth > 48) throw QuadratureError("adaptive Simpson failed to converge");
  const Real m = (a + b) / 2;
  const Real lm = (a + m) / 2, rm = (m + b) / 2;
  const Real flm = f(lm), frm = f(rm);
  const Real left = simpson_slice<Real>(a, m, fa, flm, fm);
  const Real right = simpson_slice<Real>(m, b, fm, frm, fb);
  const Real delta = left + right - whole;
  const Real bound = tol * 15;
  if ((delta < 0 ? -delta : delta) <= bound) return left + right + delta / 15;
  return adapt<Real>(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
         adapt<Real>(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

template <class Real, class F>
Real adaptive_simpson(const F& f, Real a, Real b, Real tol) {
  const Real m = (a + b) / 2;
  const Real fa = f(a), fm = f(m), fb = f(b);
  return adapt<Real>(f, a, b, fa, fm, fb, simpson_slice<Real>(a, b, fa, fm, fb), tol, 0);
}

// All margins, generic in the precision type so the same formulas run at
// float64, 50 and 100 digits.
template <class Real>
std::vector<Real> margins_at() {
  using std::exp;
  using std::sqrt;
  const Real pi = acos(Real(-1));
  const Real e = exp(Real(1));

  std::vector<Real> out;
  out.push_back(pi * pi - 4 * e);
  out.push_back(pi * pi * pi - 4 * e * e);
  out.push_back(e - pi * pi / 4);  // min over x of x^2 + e - pi x

  {  // min over the [-3,3]^2 grid of |e^{1-z} + e^{conj z}| - pi, z = x + iy
    Real best(0);
    bool first = true;
    const int side = 101;
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j) {
        const Real x = Real(-3) + Real(6) * i / (side - 1);
        const Real y = Real(-3) + Real(6) * j / (side - 1);
        const Real m1 = exp(Real(1) - x), m2 = exp(x);
        const Real re = m1 * cos(y) + m2 * cos(y);
        const Real im = -m1 * sin(y) - m2 * sin(y);
        const Real mod = sqrt(re * re + im * im);
        if (first || mod < best) {
          best = mod;
          first = false;
        }
      }
    out.push_back(best - pi);
  }

  {  // min Gaussian gap over the default (a,b) pairs
    Real best(0);
    bool first = true;
    for (const auto& [ar, br] : gaussian_gap_default_pairs()) {
      const Real a(to_double(ar)), b(to_double(br));  // pairs are small integers: exact
      const auto f = [](Real x) { return exp(-x * x); };
      const Real integral = adaptive_simpson<Real>(f, a, b, Real(kQuadTol));
      const Real rhs = exp(e) / pi * (exp(-pi * a) - exp(-pi * b));
      const Real gap = rhs - integral;
      if (first || gap < best) {
        best = gap;
        first = false;
      }
    }
    out.push_back(best);
  }
  return out;
}

template <class Real>
int sign_of(const Real& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

std::vector<MarginReport> transcendental_margins() {
  using F50 = boost::multiprecision::cpp_bin_float_50;
  using F100 = boost::multiprecision::cpp_bin_float_100;

  const auto d = margins_at<double>();
  const auto h50 = margins_at<F50>();
  const auto h100 = margins_at<F100>();

  static const char* kNames[5] = {"pi^2 - 4e", "pi^3 - 4e^2", "min x^2 + e - pi x",
                                  "grid min |e^(1-z) + e^(conj z)| - pi",
                                  "gaussian integral gap (min over default pairs)"};
  static const char* kNotes[5] = {"closed form", "closed form", "discriminant minimum",
                                  "sampled evidence (grid exploration, not a proof)",
                                  "sampled evidence (quadrature on default pairs)"};

  std::vector<MarginReport> out;
  for (size_t i = 0; i < d.size(); ++i) {
    MarginReport m;
    m.name = kNames[i];
    m.note = kNotes[i];
    m.value = d[i];
    m.value_hp = h50[i].str(50);
    m.sign = sign_of(h50[i]);
    m.sign_stable = sign_of(d[i]) == sign_of(h50[i]) && sign_of(h50[i]) == sign_of(h100[i]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ybx
