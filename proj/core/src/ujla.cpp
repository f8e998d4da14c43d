#include "ybx/ujla.hpp"

#include <algorithm>

#include "ybx/matrix.hpp"

namespace ybx {

void BilinearStructure::validate() const {
  if (dim <= 0) throw ValidationError("structure: dim must be positive");
  if (c.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError("structure: constants array must have dim^3 entries");
}

std::vector<Rational> BilinearStructure::prod(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Rational f = a[i] * b[j];
      for (int k = 0; k < dim; ++k) out[k] += f * at(i, j, k);
    }
  }
  return out;
}

namespace {

std::vector<Rational> basis_vec(int dim, int i) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = 1;
  return v;
}

// Left/right multiplication operators by the vector a, as dim x dim matrices
// acting on coordinates.  Checking a degree axiom for every b at once is one
// matrix-commutation test.
Mat<Rational> left_op(const BilinearStructure& s, const std::vector<Rational>& a) {
  Mat<Rational> m(s.dim);
  for (int i = 0; i < s.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k) m(k, j) += a[i] * s.at(i, j, k);
  }
  return m;
}

Mat<Rational> right_op(const BilinearStructure& s, const std::vector<Rational>& a) {
  Mat<Rational> m(s.dim);
  for (int j = 0; j < s.dim; ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < s.dim; ++i)
      for (int k = 0; k < s.dim; ++k) m(k, i) += s.at(i, j, k) * a[j];
  }
  return m;
}

struct GridOutcome {
  bool pass[4] = {true, true, true, true};
  AxiomWitness witness[4];
};

void grid_point(const BilinearStructure& s, const std::vector<Rational>& a, GridOutcome& out) {
  const std::vector<Rational> g = s.prod(a, a);
  const Mat<Rational> la = left_op(s, a), ra = right_op(s, a);
  const Mat<Rational> lg = left_op(s, g), rg = right_op(s, g);

  const Mat<Rational> lhs[4] = {ra * lg, rg * la, ra * rg, lg * la};
  const Mat<Rational> rhs[4] = {lg * ra, la * rg, rg * ra, la * lg};
  for (int ax = 0; ax < 4; ++ax) {
    if (!out.pass[ax]) continue;
    const Mat<Rational> diff = lhs[ax] - rhs[ax];
    if (auto w = diff.first_nonzero()) {
      out.pass[ax] = false;
      out.witness[ax] = {a, basis_vec(s.dim, std::get<1>(*w))};
    }
  }
}

void sweep_grid(const BilinearStructure& s, GridOutcome& out) {
  const int dim = s.dim;
  std::vector<Rational> a(dim, Rational(0));
  if (dim <= 6) {
    const size_t total = static_cast<size_t>(1) << (2 * dim);  // 4^dim
    for (size_t code = 0; code < total; ++code) {
      size_t c = code;
      for (int i = 0; i < dim; ++i, c >>= 2) a[i] = static_cast<long>(c & 3);
      grid_point(s, a, out);
      if (!out.pass[0] && !out.pass[1] && !out.pass[2] && !out.pass[3]) return;
    }
    return;
  }
  // dim > 6: every 3-coordinate support, full 4^3 subgrid on it.
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int z = y + 1; z < dim; ++z)
        for (int vx = 0; vx < 4; ++vx)
          for (int vy = 0; vy < 4; ++vy)
            for (int vz = 0; vz < 4; ++vz) {
              std::fill(a.begin(), a.end(), Rational(0));
              a[x] = vx;
              a[y] = vy;
              a[z] = vz;
              grid_point(s, a, out);
              if (!out.pass[0] && !out.pass[1] && !out.pass[2] && !out.pass[3]) return;
            }
}

}  // namespace

AxiomReport classify(const BilinearStructure& s) {
  s.validate();
  const int d = s.dim;
  AxiomReport rep;

  rep.commutative = rep.anticommutative = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (rep.commutative && !(s.at(i, j, k) == s.at(j, i, k))) {
          rep.commutative = false;
          rep.witnesses.emplace("commutative", AxiomWitness{basis_vec(d, i), basis_vec(d, j)});
        }
        if (rep.anticommutative && !(s.at(i, j, k) == -s.at(j, i, k))) {
          rep.anticommutative = false;
          rep.witnesses.emplace("anticommutative",
                                AxiomWitness{basis_vec(d, i), basis_vec(d, j)});
        }
      }

  rep.associative = true;
  rep.cyclic = true;
  rep.jacobi = true;
  for (int i = 0; i < d && (rep.associative || rep.cyclic || rep.jacobi); ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const auto ei = basis_vec(d, i), ej = basis_vec(d, j), ek = basis_vec(d, k);
        const auto w3 = [&] { return AxiomWitness{ei, ej, ek}; };
        if (rep.associative) {
          const auto lhs = s.prod(s.prod(ei, ej), ek);
          const auto rhs = s.prod(ei, s.prod(ej, ek));
          if (lhs != rhs) {
            rep.associative = false;
            rep.witnesses.emplace("associative", w3());
          }
        }
        if (rep.cyclic) {
          std::vector<Rational> lhs(d, Rational(0)), rhs(d, Rational(0));
          const auto add = [&](std::vector<Rational>& acc, const std::vector<Rational>& v) {
            for (int t = 0; t < d; ++t) acc[t] += v[t];
          };
          add(lhs, s.prod(s.prod(ei, ej), ek));
          add(lhs, s.prod(s.prod(ej, ek), ei));
          add(lhs, s.prod(s.prod(ek, ei), ej));
          add(rhs, s.prod(ei, s.prod(ej, ek)));
          add(rhs, s.prod(ej, s.prod(ek, ei)));
          add(rhs, s.prod(ek, s.prod(ei, ej)));
          if (lhs != rhs) {
            rep.cyclic = false;
            rep.witnesses.emplace("cyclic", w3());
          }
        }
        if (rep.jacobi) {
          std::vector<Rational> acc(d, Rational(0));
          for (const auto& v : {s.prod(s.prod(ei, ej), ek), s.prod(s.prod(ej, ek), ei),
                                s.prod(s.prod(ek, ei), ej)})
            for (int t = 0; t < d; ++t) acc[t] += v[t];
          if (std::any_of(acc.begin(), acc.end(), [](const Rational& v) { return v != 0; })) {
            rep.jacobi = false;
            rep.witnesses.emplace("jacobi", w3());
          }
        }
      }

  GridOutcome grid;
  sweep_grid(s, grid);
  static const char* kDegreeNames[4] = {"degree1", "degree2", "degree3", "degree4"};
  for (int ax = 0; ax < 4; ++ax) {
    rep.degree[ax] = grid.pass[ax];
    if (!grid.pass[ax]) rep.witnesses.emplace(kDegreeNames[ax], grid.witness[ax]);
  }
  rep.jordan_identity = grid.pass[0];
  if (!grid.pass[0]) rep.witnesses.emplace("jordan_identity", grid.witness[0]);

  rep.is_ujla = rep.cyclic && rep.degree[0] && rep.degree[1] && rep.degree[2] && rep.degree[3];
  rep.is_lie = rep.anticommutative && rep.jacobi;
  rep.is_jordan = rep.commutative && rep.jordan_identity;
  rep.is_associative = rep.associative;
  return rep;
}

BilinearStructure deform(const BilinearStructure& b, const Rational& alpha,
                         const Rational& beta) {
  b.validate();
  BilinearStructure out;
  out.dim = b.dim;
  out.c.resize(b.c.size());
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        out.at(i, j, k) = alpha * b.at(i, j, k) + beta * b.at(j, i, k);
  return out;
}

const char* functional_kind_name(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::assoc: return "assoc";
    case FunctionalKind::lie: return "lie";
    case FunctionalKind::jordan: return "jordan";
    case FunctionalKind::ujla: return "ujla";
  }
  return "?";
}

FunctionalKind functional_kind_from_name(std::string_view s) {
  if (s == "assoc") return FunctionalKind::assoc;
  if (s == "lie") return FunctionalKind::lie;
  if (s == "jordan") return FunctionalKind::jordan;
  if (s == "ujla") return FunctionalKind::ujla;
  throw ParseError("unknown functional kind '" + std::string(s) + "'");
}

BuiltStructure from_functional(const FunctionalSpec& spec, FunctionalKind kind) {
  const int d = spec.dim;
  if (d <= 0 || spec.f.size() != static_cast<size_t>(d))
    throw ValidationError("functional: f must have dim entries");

  BuiltStructure out;
  out.s.dim = d;
  out.s.c.assign(static_cast<size_t>(d) * d * d, Rational(0));

  Rational a(1), b(1);  // coefficients of f(v)w and f(w)v
  switch (kind) {
    case FunctionalKind::assoc: a = 1; b = 1; break;
    case FunctionalKind::lie: a = 1; b = -1; break;
    case FunctionalKind::jordan: a = 1; b = 1; break;
    case FunctionalKind::ujla: a = spec.alpha; b = spec.beta; break;
  }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      out.s.at(i, j, j) += a * spec.f[i];
      out.s.at(i, j, i) += b * spec.f[j];
    }

  if (kind == FunctionalKind::assoc) {
    if (spec.e.size() != static_cast<size_t>(d))
      throw ValidationError("functional: e must have dim entries");
    Rational fe(0);
    for (int i = 0; i < d; ++i) fe += spec.f[i] * spec.e[i];
    if (fe != 1) throw ValidationError("functional: assoc kind needs f(e) = 1");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational coef = spec.f[i] * spec.f[j];
        if (coef == 0) continue;
        for (int k = 0; k < d; ++k) out.s.at(i, j, k) -= coef * spec.e[k];
      }
    out.unit = spec.e;
  }
  return out;
}

BilinearStructure endo_structure(const Rational& p, const Rational& q, int d) {
  if (d < 1 || d > 3) throw DomainError("endo: d must be 1, 2 or 3");
  const int dim = d * d;
  BilinearStructure s;
  s.dim = dim;
  s.c.assign(static_cast<size_t>(dim) * dim * dim, Rational(0));
  auto idx = [d](int r, int c) { return r * d + c; };
  // E_{a1 b1} * E_{a2 b2} = p [b1 = a2] E_{a1 b2} - q [b2 = a1] E_{a2 b1}
  for (int a1 = 0; a1 < d; ++a1)
    for (int b1 = 0; b1 < d; ++b1)
      for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2) {
          if (b1 == a2) s.at(idx(a1, b1), idx(a2, b2), idx(a1, b2)) += p;
          if (b2 == a1) s.at(idx(a1, b1), idx(a2, b2), idx(a2, b1)) -= q;
        }
  return s;
}

}  // namespace ybx
