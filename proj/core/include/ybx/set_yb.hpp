#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybx/linear_yb.hpp"  // Form
#include "ybx/scalar.hpp"

namespace ybx {

// Total map S : X x X -> X x X on X = {0..n-1} as a lookup table.
struct FiniteMap {
  int n = 0;
  std::vector<std::pair<int, int>> table;  // output of (i,j) at index i*n + j

  void validate() const;
  std::pair<int, int> apply(int x, int y) const {
    return table[static_cast<size_t>(x) * n + y];
  }
  bool operator==(const FiniteMap& o) const { return n == o.n && table == o.table; }
  bool operator<(const FiniteMap& o) const { return table < o.table; }
};

FiniteMap identity_map(int n);
FiniteMap twist_map(int n);
FiniteMap logic_map();  // n = 2, (p,q) |-> (p or q, p and q)

struct SetYbReport {
  Form form = Form::braid;
  bool pass = true;
  std::uint64_t triples_checked = 0;
  struct Counterexample {
    std::array<std::string, 3> input, lhs, rhs;
  };
  std::optional<Counterexample> counterexample;  // first failure, input order
};

// Exhaustive check over all n^3 triples.
SetYbReport set_yb_check(const FiniteMap& s, Form form);

// The closed-form families.  Parameters are exact; every evaluation is exact.
enum class FamilyKind : std::uint8_t { power, linear, quotient_square, logic, minmax, gcdlcm };
const char* family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(std::string_view s);

struct ClosedFormFamily {
  FamilyKind kind = FamilyKind::power;
  Scalar alpha, beta;  // used by power (positive ints) and linear (gauss); ignored otherwise
};

SetYbReport check_family(const ClosedFormFamily& f, Form form,
                         const std::vector<std::array<Scalar, 3>>& triples);

// A small deterministic triple set suitable for the given family's domain.
std::vector<std::array<Scalar, 3>> default_family_triples(FamilyKind kind);

// (x,y) |-> (x^m y^n, x^p y^q) on positive rationals.
struct ExponentQuadruple {
  long m = 0, n = 0, p = 0, q = 0;
  bool operator==(const ExponentQuadruple& o) const = default;
  auto operator<=>(const ExponentQuadruple& o) const = default;
};

SetYbReport check_monomial(const ExponentQuadruple& e, Form form,
                           const std::vector<std::array<Rational, 3>>& triples);

// Plug (m,n,p,q) into the polynomial system characterizing the given form.
bool monomial_satisfies_system(const ExponentQuadruple& e, Form form);

// All quadruples with coordinates in [-bound, bound] solving the braid-form
// system, in lexicographic order.
std::vector<ExponentQuadruple> solve_exponent_system(long bound);

Rational pow_rational(const Rational& base, long e);  // DomainError on 0^negative

// t |-> e^t intertwines the linear solution with the power-family solution.
struct ExpMorphismReport {
  bool symbolic_pass = false;  // exponent linear forms agree coefficient-wise
  bool numeric_pass = false;
  double max_rel_err = 0.0;
  std::uint64_t samples = 0;
};
inline constexpr double kExpMorphismTol = 1e-12;
ExpMorphismReport exp_morphism_check(long alpha, long beta,
                                     const std::vector<std::pair<double, double>>& samples);

// The eight diagonal sign maps of R^3: identity, point reflection, three axis
// half-turns, three plane reflections.
struct SymmetryReport {
  bool closure = false;          // all 64 pairwise products stay in the set
  bool klein_subgroup = false;   // {I, axis half-turns} closed, each an involution
  bool planes_to_point = false;  // three plane reflections compose (both orders) to -I
  bool axes_to_identity = false; // three half-turns compose (both orders) to I
  bool pass = false;
};
SymmetryReport symmetry_checks();

enum class SortMode : std::uint8_t { minmax, gcdlcm };
SortMode sort_mode_from_name(std::string_view s);

// Repeated adjacent braid moves until fixpoint; minmax sorts, gcdlcm drains
// gcds leftward / lcms rightward.
std::vector<mpz_class> yb_sort(std::vector<mpz_class> values, SortMode mode);

// --- exhaustive enumeration, n <= 3 ---

struct EnumerationSummary {
  int n = 0;
  Form form = Form::braid;
  bool up_to_iso = false;
  std::uint64_t count = 0;         // all solutions
  std::uint64_t count_up_to_iso = 0;
  double runtime_ms = 0.0;
};

struct EnumerationResult {
  std::vector<FiniteMap> solutions;  // all, or canonical reps (up_to_iso)
  EnumerationSummary summary;
};

// Honors the YBX_THREADS environment variable; the result is identical for
// every thread count.
EnumerationResult enumerate_solutions(int n, Form form, bool up_to_iso);

FiniteMap relabel(const FiniteMap& s, const std::vector<int>& sigma);
FiniteMap canonical_form(const FiniteMap& s);  // lex-least table over all relabelings

}  // namespace ybx
