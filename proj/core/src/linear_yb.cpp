#include "ybx/linear_yb.hpp"

namespace ybx {

template <class T>
void FiniteAlgebraT<T>::validate() const {
  const size_t d = static_cast<size_t>(dim);
  if (dim <= 0) throw ValidationError("algebra: dim must be positive");
  if (unit.size() != d || mul.size() != d * d * d)
    throw ValidationError("algebra: table sizes do not match dim");
  // (e_i e_j) e_k == e_i (e_j e_k)
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int m = 0; m < dim; ++m) {
          T lhs{}, rhs{};
          for (int l = 0; l < dim; ++l) {
            lhs += c(i, j, l) * c(l, k, m);
            rhs += c(j, k, l) * c(i, l, m);
          }
          if (!(lhs == rhs))
            throw ValidationError("algebra: associativity fails on basis triple (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
        }
  // unit * e_i == e_i == e_i * unit
  for (int i = 0; i < dim; ++i)
    for (int m = 0; m < dim; ++m) {
      T left{}, right{};
      for (int l = 0; l < dim; ++l) {
        left += unit[l] * c(l, i, m);
        right += unit[l] * c(i, l, m);
      }
      const T want = (m == i) ? T(1) : T{};
      if (!(left == want) || !(right == want))
        throw ValidationError("algebra: unit law fails on basis vector " + std::to_string(i));
    }
}

template <class T>
void LieSuperAlgebraT<T>::validate() const {
  const size_t d = static_cast<size_t>(dim);
  if (dim <= 0) throw ValidationError("lie: dim must be positive");
  if (grading.size() != d || bracket.size() != d * d * d || z.size() != d)
    throw ValidationError("lie: table sizes do not match dim");
  for (int g : grading)
    if (g != 0 && g != 1) throw ValidationError("lie: grading entries must be 0 or 1");

  auto sign = [&](int i, int j) { return (grading[i] & grading[j]) ? -1 : 1; };

  // [e_i, e_j] == -(-1)^{|i||j|} [e_j, e_i]
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        T rhs = b(j, i, k) * T(-sign(i, j));
        if (!(b(i, j, k) == rhs))
          throw ValidationError("lie: graded antisymmetry fails on pair (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      }

  // graded Jacobi, cyclic with outer signs:
  //   (-1)^{|i||k|}[[i,j],k] + (-1)^{|j||i|}[[j,k],i] + (-1)^{|k||j|}[[k,i],j] == 0
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int m = 0; m < dim; ++m) {
          T acc{};
          for (int l = 0; l < dim; ++l) {
            acc += b(i, j, l) * b(l, k, m) * T(sign(i, k));
            acc += b(j, k, l) * b(l, i, m) * T(sign(j, i));
            acc += b(k, i, l) * b(l, j, m) * T(sign(k, j));
          }
          if (!(acc == T{}))
            throw ValidationError("lie: graded Jacobi fails on triple (" + std::to_string(i) +
                                  "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }

  // z even and central
  for (int i = 0; i < dim; ++i)
    if (!(z[i] == T{}) && grading[i] != 0)
      throw ValidationError("lie: z has an odd component");
  for (int i = 0; i < dim; ++i)
    for (int m = 0; m < dim; ++m) {
      T acc{};
      for (int l = 0; l < dim; ++l) acc += z[l] * b(l, i, m);
      if (!(acc == T{})) throw ValidationError("lie: z is not central");
    }
}

template void FiniteAlgebraT<Rational>::validate() const;
template void FiniteAlgebraT<GaussRational>::validate() const;
template void LieSuperAlgebraT<Rational>::validate() const;
template void LieSuperAlgebraT<GaussRational>::validate() const;

template <class T>
Mat<T> build_r_assoc(const FiniteAlgebraT<T>& a, const T& alpha, const T& beta, const T& gamma) {
  a.validate();
  const int d = a.dim;
  Mat<T> r(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int col = i * d + j;
      // alpha * (e_i e_j) (x) 1   +   beta * 1 (x) (e_i e_j)
      for (int k = 0; k < d; ++k) {
        const T& p = a.c(i, j, k);
        if (p == T{}) continue;
        for (int l = 0; l < d; ++l) {
          if (!(a.unit[l] == T{})) {
            r(k * d + l, col) += alpha * p * a.unit[l];
            r(l * d + k, col) += beta * a.unit[l] * p;
          }
        }
      }
      r(col, col) += T(-1) * gamma;
    }
  return r;
}

template Mat<Rational> build_r_assoc(const FiniteAlgebraT<Rational>&, const Rational&,
                                     const Rational&, const Rational&);
template Mat<GaussRational> build_r_assoc(const FiniteAlgebraT<GaussRational>&,
                                          const GaussRational&, const GaussRational&,
                                          const GaussRational&);

const char* param_case_name(ParamCase c) {
  switch (c) {
    case ParamCase::case_i: return "i";
    case ParamCase::case_ii: return "ii";
    case ParamCase::case_iii: return "iii";
    case ParamCase::none: return "none";
  }
  return "?";
}

ParamCase yb_param_case(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  if (!kind_is_exact(alpha.kind()) || !kind_is_exact(beta.kind()) || !kind_is_exact(gamma.kind()))
    throw KindError("yb_param_case wants exact scalars");
  if (alpha == gamma) return ParamCase::case_i;
  if (beta == gamma) return ParamCase::case_ii;
  if (alpha.is_zero() && beta.is_zero()) return ParamCase::case_iii;
  return ParamCase::none;
}

template <class T>
Mat<T> build_r_lie(const LieSuperAlgebraT<T>& l, const T& alpha) {
  l.validate();
  const int d = l.dim;
  Mat<T> r(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int col = i * d + j;
      for (int k = 0; k < d; ++k) {
        const T& bk = l.b(i, j, k);
        if (bk == T{}) continue;
        for (int m = 0; m < d; ++m)
          if (!(l.z[m] == T{})) r(k * d + m, col) += alpha * bk * l.z[m];
      }
      const T s = (l.grading[i] & l.grading[j]) ? T(-1) : T(1);
      r(j * d + i, col) += s;
    }
  return r;
}

template Mat<Rational> build_r_lie(const LieSuperAlgebraT<Rational>&, const Rational&);
template Mat<GaussRational> build_r_lie(const LieSuperAlgebraT<GaussRational>&,
                                        const GaussRational&);

const char* form_name(Form f) { return f == Form::braid ? "braid" : "qybe"; }

Form form_from_name(std::string_view s) {
  if (s == "braid") return Form::braid;
  if (s == "qybe") return Form::qybe;
  throw ParseError("bad form '" + std::string(s) + "' (want braid or qybe)");
}

template <class T>
YbReport yb_residual(const Mat<T>& r, int d, Form form) {
  if (r.dim() != d * d) throw DimError("yb_residual: operator is not d^2 x d^2");
  const Mat<T> a12 = lift(r, d, Leg::l12);
  const Mat<T> a23 = lift(r, d, Leg::l23);
  Mat<T> diff;
  if (form == Form::braid) {
    diff = a12 * a23 * a12 - a23 * a12 * a23;
  } else {
    const Mat<T> a13 = lift(r, d, Leg::l13);
    diff = a12 * a13 * a23 - a23 * a13 * a12;
  }
  YbReport rep;
  rep.form = form;
  rep.residual = norm_of(diff);
  rep.invertible = invertible(r);
  if (auto w = diff.first_nonzero())
    rep.witness = {std::get<0>(*w), std::get<1>(*w), ScalarOps<T>::str(std::get<2>(*w))};
  return rep;
}

template YbReport yb_residual(const Mat<Rational>&, int, Form);
template YbReport yb_residual(const Mat<GaussRational>&, int, Form);
template YbReport yb_residual(const Mat<double>&, int, Form);
template YbReport yb_residual(const Mat<Complex>&, int, Form);

YbReport yb_residual(const AnyMatrix& r, int d, Form form) {
  return r.visit([&](const auto& m) { return yb_residual(m, d, form); });
}

std::pair<AnyMatrix, AnyMatrix> braid_qybe_transport(const AnyMatrix& r, int d) {
  return r.visit([&](const auto& m) {
    auto [a, b] = braid_qybe_transport(m, d);
    return std::pair<AnyMatrix, AnyMatrix>(AnyMatrix(std::move(a)), AnyMatrix(std::move(b)));
  });
}

std::pair<Mat<Rational>, Mat<Rational>> gate_matrices() {
  Mat<Rational> g = build_r_assoc(algebra_dual_numbers(), rat(1), rat(1), rat(1));
  Mat<Rational> cnot(4);
  cnot(0, 0) = 1;
  cnot(1, 1) = 1;
  cnot(2, 3) = 1;
  cnot(3, 2) = 1;
  return {g, cnot};
}

FiniteAlgebra algebra_scalar() {
  FiniteAlgebra a;
  a.dim = 1;
  a.unit = {rat(1)};
  a.mul = {rat(1)};
  return a;
}

FiniteAlgebra algebra_dual_numbers() {
  FiniteAlgebra a;
  a.dim = 2;
  a.unit = {rat(1), rat(0)};
  a.mul.assign(8, rat(0));
  a.c(0, 0, 0) = 1;  // 1*1 = 1
  a.c(0, 1, 1) = 1;  // 1*x = x
  a.c(1, 0, 1) = 1;  // x*1 = x
  // x*x = 0
  return a;
}

FiniteAlgebra algebra_m2() {
  // basis e11, e12, e21, e22; E_{ab} E_{cd} = delta_{bc} E_{ad}
  FiniteAlgebra a;
  a.dim = 4;
  a.unit.assign(4, rat(0));
  a.unit[0] = 1;
  a.unit[3] = 1;
  a.mul.assign(64, rat(0));
  auto idx = [](int r, int c) { return r * 2 + c; };
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c1 == r2) a.c(idx(r1, c1), idx(r2, c2), idx(r1, c2)) = 1;
  return a;
}

FiniteAlgebra algebra_k_times_k() {
  FiniteAlgebra a;
  a.dim = 2;
  a.unit = {rat(1), rat(1)};
  a.mul.assign(8, rat(0));
  a.c(0, 0, 0) = 1;
  a.c(1, 1, 1) = 1;
  return a;
}

std::optional<FiniteAlgebra> named_algebra(std::string_view name) {
  if (name == "k") return algebra_scalar();
  if (name == "dual") return algebra_dual_numbers();
  if (name == "m2") return algebra_m2();
  if (name == "kxk") return algebra_k_times_k();
  return std::nullopt;
}

LieSuperAlgebra lie_heisenberg() {
  LieSuperAlgebra l;
  l.dim = 3;
  l.grading = {0, 0, 0};
  l.bracket.assign(27, rat(0));
  l.b(0, 1, 2) = 1;
  l.b(1, 0, 2) = -1;
  l.z.assign(3, rat(0));
  l.z[2] = 1;
  return l;
}

LieSuperAlgebra lie_abelian(int dim, std::vector<int> grading, int z_index) {
  LieSuperAlgebra l;
  l.dim = dim;
  l.grading = std::move(grading);
  l.bracket.assign(static_cast<size_t>(dim) * dim * dim, rat(0));
  l.z.assign(dim, rat(0));
  l.z[z_index] = 1;
  return l;
}

LieSuperAlgebra lie_super_osc() {
  LieSuperAlgebra l;
  l.dim = 2;
  l.grading = {0, 1};
  l.bracket.assign(8, rat(0));
  l.b(1, 1, 0) = 1;  // [odd, odd] = even; symmetric is the graded-antisymmetric sign here
  l.z.assign(2, rat(0));
  l.z[0] = 1;
  return l;
}

std::optional<LieSuperAlgebra> named_lie(std::string_view name) {
  if (name == "heisenberg") return lie_heisenberg();
  if (name == "abelian3") return lie_abelian(3, {0, 0, 0}, 0);
  if (name == "abelian-super") return lie_abelian(2, {0, 1}, 0);
  if (name == "super-osc") return lie_super_osc();
  return std::nullopt;
}

std::vector<std::pair<Mat<Rational>, int>> transport_corpus() {
  std::vector<std::pair<Mat<Rational>, int>> out;
  auto add = [&](Mat<Rational> m, int d) { out.emplace_back(std::move(m), d); };

  add(twist_matrix<Rational>(2), 2);
  add(twist_matrix<Rational>(3), 3);
  add(Mat<Rational>::identity(4), 2);
  add(Mat<Rational>::identity(9), 3);

  auto [gate, cnot] = gate_matrices();
  add(gate, 2);
  add(cnot, 2);

  const FiniteAlgebra dual = algebra_dual_numbers();
  add(build_r_assoc(dual, rat(1), rat(2), rat(1)), 2);     // branch i
  add(build_r_assoc(dual, rat(3), rat(-1), rat(-1)), 2);   // branch ii
  add(build_r_assoc(dual, rat(0), rat(0), rat(5)), 2);     // branch iii
  add(build_r_assoc(dual, rat(1), rat(2), rat(3)), 2);     // no branch: fails both forms
  add(build_r_assoc(dual, rat(1, 2), rat(7), rat(1, 2)), 2);

  add(build_r_assoc(algebra_k_times_k(), rat(2), rat(3), rat(2)), 2);
  add(build_r_assoc(algebra_k_times_k(), rat(1), rat(1), rat(1)), 2);
  add(build_r_assoc(algebra_m2(), rat(1), rat(1), rat(1)), 4);

  add(build_r_lie(lie_heisenberg(), rat(1)), 3);
  add(build_r_lie(lie_heisenberg(), rat(5)), 3);
  add(build_r_lie(lie_abelian(2, {0, 1}, 0), rat(2)), 2);
  add(build_r_lie(lie_super_osc(), rat(3)), 2);

  {
    Mat<Rational> diag(4);
    for (int i = 0; i < 4; ++i) diag(i, i) = rat(i + 1);
    add(diag, 2);
  }
  {
    Mat<Rational> m(4);  // dense, no structure at all
    int v = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rat((v++ % 7) - 3, 2);
    add(m, 2);
  }
  {
    Mat<Rational> nil(4);  // strictly upper triangular
    nil(0, 1) = 1;
    nil(0, 3) = rat(1, 3);
    nil(1, 2) = -2;
    nil(2, 3) = 5;
    add(nil, 2);
  }
  {
    Mat<Rational> cyc(4);  // 4-cycle permutation on the tensor basis
    cyc(1, 0) = 1;
    cyc(2, 1) = 1;
    cyc(3, 2) = 1;
    cyc(0, 3) = 1;
    add(cyc, 2);
  }
  add(build_r_assoc(algebra_scalar(), rat(4), rat(4), rat(4)), 1);
  add(build_r_assoc(dual, rat(-2), rat(3), rat(-2)), 2);

  return out;
}

}  // namespace ybx
