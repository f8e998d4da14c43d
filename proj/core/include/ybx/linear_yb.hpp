#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybx/matrix.hpp"

namespace ybx {

// Finite-dimensional unital associative algebra given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k.  Validation is not optional — a bogus
// table would quietly poison every theorem check built on top of it.
template <class T>
struct FiniteAlgebraT {
  int dim = 0;
  std::vector<T> unit;  // coordinates of 1
  std::vector<T> mul;   // c[(i*dim + j)*dim + k]

  const T& c(int i, int j, int k) const {
    return mul[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  T& c(int i, int j, int k) { return mul[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  std::vector<T> product(const std::vector<T>& a, const std::vector<T>& b) const {
    std::vector<T> out(dim, T{});
    for (int i = 0; i < dim; ++i) {
      if (a[i] == T{}) continue;
      for (int j = 0; j < dim; ++j) {
        if (b[j] == T{}) continue;
        const T f = a[i] * b[j];
        for (int k = 0; k < dim; ++k) out[k] += f * c(i, j, k);
      }
    }
    return out;
  }

  void validate() const;  // associativity on basis triples + two-sided unit
};

using FiniteAlgebra = FiniteAlgebraT<Rational>;

// Z/2-graded Lie algebra with a distinguished even central element z.
template <class T>
struct LieSuperAlgebraT {
  int dim = 0;
  std::vector<int> grading;  // 0 = even, 1 = odd
  std::vector<T> bracket;    // b[(i*dim + j)*dim + k]
  std::vector<T> z;

  const T& b(int i, int j, int k) const {
    return bracket[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  T& b(int i, int j, int k) { return bracket[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  void validate() const;  // graded antisymmetry, graded Jacobi, z even & central
};

using LieSuperAlgebra = LieSuperAlgebraT<Rational>;

// r from an associative algebra:  a(x)b  |->  alpha*ab(x)1 + beta*1(x)ab - gamma*a(x)b.
template <class T>
Mat<T> build_r_assoc(const FiniteAlgebraT<T>& a, const T& alpha, const T& beta, const T& gamma);

// Which of the three sufficient parameter branches (alpha,beta,gamma) falls in.
enum class ParamCase { case_i, case_ii, case_iii, none };
const char* param_case_name(ParamCase c);
ParamCase yb_param_case(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

// r from a Lie superalgebra:  x(x)y  |->  alpha*[x,y](x)z + (-1)^{|x||y|} y(x)x.
template <class T>
Mat<T> build_r_lie(const LieSuperAlgebraT<T>& l, const T& alpha);

enum class Form : std::uint8_t { braid, qybe };
const char* form_name(Form f);
Form form_from_name(std::string_view s);

struct YbReport {
  Form form = Form::braid;
  Norm residual;
  bool invertible = false;
  // First nonzero residual entry, row-major: (row, col, value as text).
  std::optional<std::tuple<int, int, std::string>> witness;
};

// Residual of the chosen equation form for r acting on (k^d)^(x)2, computed on
// the triple product:  braid uses legs 12,23,12 vs 23,12,23; the other form
// uses 12,13,23 vs 23,13,12.
template <class T>
YbReport yb_residual(const Mat<T>& r, int d, Form form);
YbReport yb_residual(const AnyMatrix& r, int d, Form form);

// The two flip-composes of r; each satisfies one form iff r satisfies the other.
template <class T>
std::pair<Mat<T>, Mat<T>> braid_qybe_transport(const Mat<T>& r, int d) {
  if (r.dim() != d * d) throw DimError("transport: operator is not d^2 x d^2");
  const Mat<T> tw = twist_matrix<T>(d);
  return {r * tw, tw * r};
}
std::pair<AnyMatrix, AnyMatrix> braid_qybe_transport(const AnyMatrix& r, int d);

// The two 4x4 gate matrices: the dual-number operator at parameters (1,1,1)
// and the controlled-NOT.  Both are involutions.
std::pair<Mat<Rational>, Mat<Rational>> gate_matrices();

// Ready-made structures used by tests, the audit and the CLI's named inputs.
FiniteAlgebra algebra_scalar();        // k
FiniteAlgebra algebra_dual_numbers();  // k[x]/(x^2), basis (1, x)
FiniteAlgebra algebra_m2();            // 2x2 matrix units e11,e12,e21,e22
FiniteAlgebra algebra_k_times_k();     // k x k componentwise
std::optional<FiniteAlgebra> named_algebra(std::string_view name);

LieSuperAlgebra lie_heisenberg();  // [e1,e2] = e3, z = e3
LieSuperAlgebra lie_abelian(int dim, std::vector<int> grading, int z_index);
LieSuperAlgebra lie_super_osc();  // |e2| = 1, [e2,e2] = e1, z = e1
std::optional<LieSuperAlgebra> named_lie(std::string_view name);

// A pool of small rational operators (with their d) exercising the transport
// equivalence: permutations, gates, constructed operators, ad-hoc integer
// matrices.  At least twenty entries.
std::vector<std::pair<Mat<Rational>, int>> transport_corpus();

}  // namespace ybx
