#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

// An arbitrary bilinear product on k^dim given by structure constants,
// before anybody has decided what kind of algebra it is.
struct BilinearStructure {
  int dim = 0;
  std::vector<Rational> c;  // c[(i*dim + j)*dim + k]

  const Rational& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Rational& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  void validate() const;  // shape only

  std::vector<Rational> prod(const std::vector<Rational>& a,
                             const std::vector<Rational>& b) const;

  bool operator==(const BilinearStructure& o) const = default;
};

// Coordinate vectors witnessing a failed axiom, in evaluation order
// (e.g. {a, b} for a degree axiom, {e_i, e_j, e_k} for a trilinear one).
using AxiomWitness = std::vector<std::vector<Rational>>;

struct AxiomReport {
  bool cyclic = false;        // (ab)c + (bc)a + (ca)b = a(bc) + b(ca) + c(ab)
  bool degree[4] = {};        // (a2b)a=a2(ba), (ab)a2=a(ba2), (ba2)a=(ba)a2, a2(ab)=a(a2b)
  bool commutative = false;
  bool anticommutative = false;
  bool associative = false;
  bool jacobi = false;
  bool jordan_identity = false;  // (a2b)a = a2(ba)

  bool is_ujla = false;         // cyclic && all four degree axioms
  bool is_lie = false;          // anticommutative && jacobi
  bool is_jordan = false;       // commutative && jordan_identity
  bool is_associative = false;  // associative

  std::map<std::string, AxiomWitness> witnesses;  // keyed by failed flag name
};

// Exact decision for every flag.  Multilinear axioms go over basis tuples;
// the degree axioms are cubic in one variable, so they are decided by exact
// evaluation on a {0,1,2,3} grid per coordinate (4 points beat degree 3).
// Above six dimensions the grid runs over every 3-element coordinate subset
// instead of the full 4^dim box — sound because total degree is 3, hence no
// monomial touches more than three coordinates.
AxiomReport classify(const BilinearStructure& b);

// c'[i][j][k] = alpha*c[i][j][k] + beta*c[j][i][k].
BilinearStructure deform(const BilinearStructure& b, const Rational& alpha,
                         const Rational& beta);

struct FunctionalSpec {
  int dim = 0;
  std::vector<Rational> f;  // linear functional, row
  std::vector<Rational> e;  // distinguished vector (assoc kind)
  Rational alpha, beta;     // ujla kind
};

enum class FunctionalKind : std::uint8_t { assoc, lie, jordan, ujla };
const char* functional_kind_name(FunctionalKind k);
FunctionalKind functional_kind_from_name(std::string_view s);

struct BuiltStructure {
  BilinearStructure s;
  std::optional<std::vector<Rational>> unit;  // assoc kind only
};

// The four one-functional products:
//   assoc : vw = f(v)w + f(w)v - f(v)f(w)e   (needs f(e) = 1; e is the unit)
//   lie   : vw = f(v)w - f(w)v
//   jordan: vw = f(v)w + f(w)v
//   ujla  : vw = alpha f(v)w + beta f(w)v
BuiltStructure from_functional(const FunctionalSpec& spec, FunctionalKind kind);

// End(k^d) in the matrix-unit basis with product p*(f o g) - q*(g o f).
BilinearStructure endo_structure(const Rational& p, const Rational& q, int d);

}  // namespace ybx
