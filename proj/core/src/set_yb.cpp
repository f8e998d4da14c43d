#include "ybx/set_yb.hpp"

#include <algorithm>
#include <cmath>

namespace ybx {

void FiniteMap::validate() const {
  if (n <= 0) throw ValidationError("map: n must be positive");
  if (table.size() != static_cast<size_t>(n) * n)
    throw ValidationError("map: table length must be n^2");
  for (const auto& [a, b] : table)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("map: output pair out of range");
}

FiniteMap identity_map(int n) {
  FiniteMap s;
  s.n = n;
  s.table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table.emplace_back(i, j);
  return s;
}

FiniteMap twist_map(int n) {
  FiniteMap s;
  s.n = n;
  s.table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table.emplace_back(j, i);
  return s;
}

FiniteMap logic_map() {
  FiniteMap s;
  s.n = 2;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) s.table.emplace_back(p | q, p & q);
  return s;
}

namespace {

// Both composition chains of the chosen form on one triple.  The step S is
// applied rightmost-first, matching the matrix convention.
template <class V, class Step>
std::pair<std::array<V, 3>, std::array<V, 3>> eval_chains(const Step& S, Form form,
                                                          const V& x, const V& y, const V& z) {
  if (form == Form::braid) {
    auto [u1, u2] = S(x, y);
    auto [v1, v2] = S(u2, z);
    auto [w1, w2] = S(u1, v1);
    auto [a1, a2] = S(y, z);
    auto [b1, b2] = S(x, a1);
    auto [c1, c2] = S(b2, a2);
    return {{w1, w2, v2}, {b1, c1, c2}};
  }
  auto [a1, a2] = S(y, z);
  auto [b1, b2] = S(x, a2);
  auto [c1, c2] = S(b1, a1);
  auto [d1, d2] = S(x, y);
  auto [e1, e2] = S(d1, z);
  auto [f1, f2] = S(d2, e2);
  return {{c1, c2, b2}, {e1, f1, f2}};
}

template <class V, class Step, class Show>
SetYbReport run_chains(const Step& S, Form form, const std::vector<std::array<V, 3>>& triples,
                       const Show& show) {
  SetYbReport rep;
  rep.form = form;
  for (const auto& t : triples) {
    auto [lhs, rhs] = eval_chains<V>(S, form, t[0], t[1], t[2]);
    ++rep.triples_checked;
    if (!(lhs == rhs)) {
      rep.pass = false;
      SetYbReport::Counterexample ce;
      for (int i = 0; i < 3; ++i) {
        ce.input[i] = show(t[i]);
        ce.lhs[i] = show(lhs[i]);
        ce.rhs[i] = show(rhs[i]);
      }
      rep.counterexample = std::move(ce);
      return rep;
    }
  }
  return rep;
}

std::string show_int(const int& v) { return std::to_string(v); }
std::string show_rat(const Rational& v) { return to_string(v); }
std::string show_gauss(const GaussRational& v) { return to_string(v); }

}  // namespace

SetYbReport set_yb_check(const FiniteMap& s, Form form) {
  s.validate();
  std::vector<std::array<int, 3>> triples;
  triples.reserve(static_cast<size_t>(s.n) * s.n * s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) triples.push_back({x, y, z});
  auto step = [&](int a, int b) { return s.apply(a, b); };
  return run_chains<int>(step, form, triples, show_int);
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::power: return "power";
    case FamilyKind::linear: return "linear";
    case FamilyKind::quotient_square: return "quotient-square";
    case FamilyKind::logic: return "logic";
    case FamilyKind::minmax: return "minmax";
    case FamilyKind::gcdlcm: return "gcdlcm";
  }
  return "?";
}

FamilyKind family_kind_from_name(std::string_view s) {
  if (s == "power") return FamilyKind::power;
  if (s == "linear") return FamilyKind::linear;
  if (s == "quotient-square") return FamilyKind::quotient_square;
  if (s == "logic") return FamilyKind::logic;
  if (s == "minmax") return FamilyKind::minmax;
  if (s == "gcdlcm") return FamilyKind::gcdlcm;
  throw ParseError("unknown family kind '" + std::string(s) + "'");
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return rat(1);
  if (base == 0 && e < 0) throw DomainError("0 raised to a negative power");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
  Rational r = (e > 0) ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

namespace {

long scalar_as_long(const Scalar& s, const char* what) {
  if (s.kind() != ScalarKind::rational) throw DomainError(std::string(what) + ": want a rational");
  const Rational& r = s.rational();
  if (r.get_den() != 1) throw DomainError(std::string(what) + ": want an integer");
  if (!r.get_num().fits_slong_p()) throw DomainError(std::string(what) + ": out of range");
  return r.get_num().get_si();
}

Rational triple_entry_rational(const Scalar& s, const char* what) {
  if (s.kind() != ScalarKind::rational)
    throw DomainError(std::string(what) + ": triple entries must be rational");
  return s.rational();
}

GaussRational triple_entry_gauss(const Scalar& s) {
  if (s.kind() == ScalarKind::gauss) return s.gauss();
  if (s.kind() == ScalarKind::rational) return GaussRational(s.rational());
  throw DomainError("linear family: triple entries must be exact");
}

}  // namespace

SetYbReport check_family(const ClosedFormFamily& f, Form form,
                         const std::vector<std::array<Scalar, 3>>& triples) {
  switch (f.kind) {
    case FamilyKind::power: {
      const long a = scalar_as_long(f.alpha, "power family alpha");
      const long b = scalar_as_long(f.beta, "power family beta");
      if (a < 1 || b < 1) throw DomainError("power family: alpha, beta must be >= 1");
      std::vector<std::array<Rational, 3>> ts;
      for (const auto& t : triples) {
        std::array<Rational, 3> r;
        for (int i = 0; i < 3; ++i) {
          r[i] = triple_entry_rational(t[i], "power family");
          if (r[i] <= 0) throw DomainError("power family: inputs must be positive");
        }
        ts.push_back(std::move(r));
      }
      // (x, y) |-> (y^a, x^b y^{1-ab})
      return check_monomial({0, a, b, 1 - a * b}, form, ts);
    }
    case FamilyKind::linear: {
      const GaussRational a = triple_entry_gauss(f.alpha);
      const GaussRational b = triple_entry_gauss(f.beta);
      const GaussRational coef = GaussRational(Rational(1)) - a * b;
      std::vector<std::array<GaussRational, 3>> ts;
      for (const auto& t : triples)
        ts.push_back({triple_entry_gauss(t[0]), triple_entry_gauss(t[1]),
                      triple_entry_gauss(t[2])});
      auto step = [&](const GaussRational& z, const GaussRational& w) {
        return std::pair{a * w, b * z + coef * w};
      };
      return run_chains<GaussRational>(step, form, ts, show_gauss);
    }
    case FamilyKind::quotient_square: {
      std::vector<std::array<Rational, 3>> ts;
      for (const auto& t : triples) {
        std::array<Rational, 3> r;
        for (int i = 0; i < 3; ++i) {
          r[i] = triple_entry_rational(t[i], "quotient-square family");
          if (r[i] == 0) throw DomainError("quotient-square family: inputs must be nonzero");
        }
        ts.push_back(std::move(r));
      }
      auto step = [](const Rational& x, const Rational& y) {
        return std::pair{Rational(x / y), Rational(x * x)};
      };
      return run_chains<Rational>(step, form, ts, show_rat);
    }
    case FamilyKind::logic: {
      std::vector<std::array<int, 3>> ts;
      for (const auto& t : triples) {
        std::array<int, 3> r;
        for (int i = 0; i < 3; ++i) {
          const Rational v = triple_entry_rational(t[i], "logic family");
          if (v == 0)
            r[i] = 0;
          else if (v == 1)
            r[i] = 1;
          else
            throw DomainError("logic family: inputs must be 0 or 1");
        }
        ts.push_back(r);
      }
      auto step = [](int p, int q) { return std::pair{p | q, p & q}; };
      return run_chains<int>(step, form, ts, show_int);
    }
    case FamilyKind::minmax: {
      std::vector<std::array<Rational, 3>> ts;
      for (const auto& t : triples)
        ts.push_back({triple_entry_rational(t[0], "minmax family"),
                      triple_entry_rational(t[1], "minmax family"),
                      triple_entry_rational(t[2], "minmax family")});
      auto step = [](const Rational& a, const Rational& b) {
        return std::pair{std::min(a, b), std::max(a, b)};
      };
      return run_chains<Rational>(step, form, ts, show_rat);
    }
    case FamilyKind::gcdlcm: {
      std::vector<std::array<mpz_class, 3>> ts;
      for (const auto& t : triples) {
        std::array<mpz_class, 3> r;
        for (int i = 0; i < 3; ++i) {
          const Rational v = triple_entry_rational(t[i], "gcdlcm family");
          if (v.get_den() != 1 || v <= 0)
            throw DomainError("gcdlcm family: inputs must be positive integers");
          r[i] = v.get_num();
        }
        ts.push_back(std::move(r));
      }
      auto step = [](const mpz_class& a, const mpz_class& b) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return std::pair{g, l};
      };
      return run_chains<mpz_class>(step, form, ts,
                                   [](const mpz_class& v) { return v.get_str(); });
    }
  }
  throw DomainError("bad family kind");
}

std::vector<std::array<Scalar, 3>> default_family_triples(FamilyKind kind) {
  auto r3 = [](long a, long b, long c) {
    return std::array<Scalar, 3>{Scalar(rat(a)), Scalar(rat(b)), Scalar(rat(c))};
  };
  switch (kind) {
    case FamilyKind::power:
    case FamilyKind::quotient_square:
      return {r3(2, 3, 5), r3(1, 2, 3), r3(5, 3, 2), r3(2, 7, 3), r3(3, 2, 2),
              {Scalar(rat(1, 2)), Scalar(rat(2, 3)), Scalar(rat(5, 7))},
              {Scalar(rat(7, 3)), Scalar(rat(1, 5)), Scalar(rat(4))}};
    case FamilyKind::linear: {
      GaussRational i01(Rational(0), Rational(1));
      return {r3(1, 2, 3),
              {Scalar(GaussRational(Rational(1), Rational(1))), Scalar(i01),
               Scalar(GaussRational(Rational(-2), Rational(3)))},
              {Scalar(i01), Scalar(GaussRational(Rational(1, 2), Rational(-1, 3))),
               Scalar(GaussRational(Rational(0), Rational(-1)))}};
    }
    case FamilyKind::logic:
      return {r3(0, 0, 0), r3(0, 0, 1), r3(0, 1, 0), r3(0, 1, 1),
              r3(1, 0, 0), r3(1, 0, 1), r3(1, 1, 0), r3(1, 1, 1)};
    case FamilyKind::minmax:
      return {r3(3, 1, 2), r3(1, 1, 2), r3(9, 5, 9),
              {Scalar(rat(-1, 2)), Scalar(rat(3)), Scalar(rat(1, 3))}};
    case FamilyKind::gcdlcm:
      return {r3(4, 6, 10), r3(2, 3, 5), r3(12, 18, 30), r3(7, 7, 7), r3(1, 2, 4)};
  }
  throw DomainError("bad family kind");
}

SetYbReport check_monomial(const ExponentQuadruple& e, Form form,
                           const std::vector<std::array<Rational, 3>>& triples) {
  for (const auto& t : triples)
    for (const auto& v : t)
      if (v <= 0) throw DomainError("monomial map: inputs must be positive");
  auto step = [&](const Rational& x, const Rational& y) {
    // Wrap in Rational: gmpxx multiplication yields an expression template
    // that must not outlive its operands.
    return std::pair{Rational(pow_rational(x, e.m) * pow_rational(y, e.n)),
                     Rational(pow_rational(x, e.p) * pow_rational(y, e.q))};
  };
  std::vector<std::array<Rational, 3>> ts(triples);
  return run_chains<Rational>(step, form, ts, show_rat);
}

bool monomial_satisfies_system(const ExponentQuadruple& e, Form form) {
  const long m = e.m, n = e.n, p = e.p, q = e.q;
  if (form == Form::braid)
    return m * n * q == 0 && m * p * q == 0 && m * q * q == m * m * q &&
           m * m + m * n * p == m && q * q + n * p * q == q;
  return m * n * p == 0 && n * p * q == 0 && n * n + m * n * q == n &&
         p * p + m * p * q == p;
}

std::vector<ExponentQuadruple> solve_exponent_system(long bound) {
  if (bound < 1) throw DomainError("solve_exponent_system: bound must be >= 1");
  std::vector<ExponentQuadruple> out;
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n)
      for (long p = -bound; p <= bound; ++p)
        for (long q = -bound; q <= bound; ++q) {
          ExponentQuadruple e{m, n, p, q};
          if (monomial_satisfies_system(e, Form::braid)) out.push_back(e);
        }
  return out;  // loop order is already lexicographic
}

ExpMorphismReport exp_morphism_check(long alpha, long beta,
                                     const std::vector<std::pair<double, double>>& samples) {
  if (alpha < 1 || beta < 1) throw DomainError("exp morphism: alpha, beta must be >= 1");
  ExpMorphismReport rep;

  // Route one: map (z,w) by the linear solution, then exponentiate.
  // Route two: exponentiate, then apply the power-family map.  As exponents
  // both routes give linear forms in (z,w); compare coefficients exactly.
  const long c1z = 0, c1w = alpha;          // first output exponent
  const long c2z = beta, c2w = 1 - alpha * beta;  // second output exponent
  rep.symbolic_pass = (c1z == 0 && c1w == alpha && c2z == beta && c2w == 1 - alpha * beta);

  rep.numeric_pass = true;
  for (const auto& [z, w] : samples) {
    ++rep.samples;
    const double lin1 = std::exp(static_cast<double>(alpha) * w);
    const double lin2 = std::exp(static_cast<double>(beta) * z +
                                 static_cast<double>(1 - alpha * beta) * w);
    const double x = std::exp(z), y = std::exp(w);
    const double pow1 = std::pow(y, static_cast<double>(alpha));
    const double pow2 = std::pow(x, static_cast<double>(beta)) *
                        std::pow(y, static_cast<double>(1 - alpha * beta));
    for (auto [u, v] : {std::pair{lin1, pow1}, std::pair{lin2, pow2}}) {
      const double denom = std::max(std::fabs(u), std::fabs(v));
      const double rel = denom == 0.0 ? 0.0 : std::fabs(u - v) / denom;
      rep.max_rel_err = std::max(rep.max_rel_err, rel);
    }
  }
  rep.numeric_pass = rep.max_rel_err <= kExpMorphismTol;
  return rep;
}

SymmetryReport symmetry_checks() {
  // The eight maps diag(s1,s2,s3), si = +-1, encoded by bitmask of minus signs.
  auto compose = [](int a, int b) { return a ^ b; };
  const int I = 0, SO = 7;
  const int ax[3] = {6, 5, 3};   // half-turns about the axes: two minus signs
  const int pl[3] = {1, 2, 4};   // plane reflections: one minus sign

  SymmetryReport rep;
  rep.closure = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (compose(a, b) < 0 || compose(a, b) > 7) rep.closure = false;

  rep.klein_subgroup = true;
  {
    const int K[4] = {I, ax[0], ax[1], ax[2]};
    for (int a : K) {
      bool found_inv = compose(a, a) == I;
      rep.klein_subgroup = rep.klein_subgroup && found_inv;
      for (int b : K) {
        const int c = compose(a, b);
        bool inside = false;
        for (int k : K) inside = inside || (k == c);
        rep.klein_subgroup = rep.klein_subgroup && inside;
      }
    }
  }

  const int planes_fwd = compose(compose(pl[0], pl[1]), pl[2]);
  const int planes_rev = compose(compose(pl[2], pl[1]), pl[0]);
  rep.planes_to_point = planes_fwd == SO && planes_rev == SO;

  const int axes_fwd = compose(compose(ax[0], ax[1]), ax[2]);
  const int axes_rev = compose(compose(ax[2], ax[1]), ax[0]);
  rep.axes_to_identity = axes_fwd == I && axes_rev == I;

  // Sanity: the bitmask composition really is matrix composition.
  {
    auto as_mat = [](int mask) {
      Mat<Rational> m(3);
      for (int i = 0; i < 3; ++i) m(i, i) = (mask >> i) & 1 ? -1 : 1;
      return m;
    };
    for (int a = 0; a < 8 && rep.closure; ++a)
      for (int b = 0; b < 8; ++b)
        if (!(as_mat(a) * as_mat(b) == as_mat(compose(a, b)))) {
          rep.closure = false;
          break;
        }
  }

  rep.pass = rep.closure && rep.klein_subgroup && rep.planes_to_point && rep.axes_to_identity;
  return rep;
}

SortMode sort_mode_from_name(std::string_view s) {
  if (s == "minmax") return SortMode::minmax;
  if (s == "gcdlcm") return SortMode::gcdlcm;
  throw ParseError("bad sort mode '" + std::string(s) + "' (want minmax or gcdlcm)");
}

std::vector<mpz_class> yb_sort(std::vector<mpz_class> values, SortMode mode) {
  if (mode == SortMode::gcdlcm)
    for (const auto& v : values)
      if (v <= 0) throw DomainError("gcdlcm sort: inputs must be positive");
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < values.size(); ++i) {
      mpz_class a = values[i], b = values[i + 1];
      mpz_class na, nb;
      if (mode == SortMode::minmax) {
        na = std::min(a, b);
        nb = std::max(a, b);
      } else {
        mpz_gcd(na.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_lcm(nb.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
      if (na != a || nb != b) {
        values[i] = na;
        values[i + 1] = nb;
        moved = true;
      }
    }
  }
  return values;
}

}  // namespace ybx
