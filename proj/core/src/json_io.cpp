#include "ybx/json_io.hpp"

namespace ybx {

const Json& require_field(const Json& j, const char* field, const char* ctx) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string(ctx) + ": missing field '" + field + "'");
  return j.at(field);
}

namespace {

int int_field(const Json& j, const char* field, const char* ctx) {
  const Json& v = require_field(j, field, ctx);
  if (!v.is_number_integer())
    throw ParseError(std::string(ctx) + ": field '" + field + "' must be an integer");
  return v.get<int>();
}

Json scalar_entry_to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::rational:
    case ScalarKind::gauss: return s.str();
    case ScalarKind::float64: return s.float64();
    case ScalarKind::cfloat64: return Json::array({s.cfloat64().real(), s.cfloat64().imag()});
  }
  throw ParseError("bad scalar");
}

Scalar scalar_entry_from_json(const Json& v, ScalarKind k, const char* ctx) {
  switch (k) {
    case ScalarKind::rational:
    case ScalarKind::gauss:
      if (!v.is_string())
        throw ParseError(std::string(ctx) + ": exact entries must be strings");
      return Scalar::parse(v.get<std::string>(), k);
    case ScalarKind::float64:
      if (!v.is_number()) throw ParseError(std::string(ctx) + ": float entries must be numbers");
      return Scalar(v.get<double>());
    case ScalarKind::cfloat64:
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ParseError(std::string(ctx) + ": cfloat entries must be [re, im] numbers");
      return Scalar(Complex(v[0].get<double>(), v[1].get<double>()));
  }
  throw ParseError("bad scalar kind");
}

template <class T>
Json mat_to_json_typed(const Mat<T>& m, ScalarKind k) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_entry_to_json(Scalar(m(i, j))));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.dim()}, {"scalar", kind_name(k)}, {"entries", std::move(rows)}};
}

template <class T, class FromScalar>
Mat<T> mat_from_rows(const Json& rows, int dim, ScalarKind k, const FromScalar& get) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw ParseError("matrix: 'entries' must be a dim x dim array");
  Mat<T> m(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("matrix: row " + std::to_string(i) + " has the wrong length");
    for (int j = 0; j < dim; ++j) m(i, j) = get(scalar_entry_from_json(row[j], k, "matrix"));
  }
  return m;
}

}  // namespace

Json matrix_to_json(const AnyMatrix& m) {
  switch (m.kind()) {
    case ScalarKind::rational: return mat_to_json_typed(m.as<Rational>(), m.kind());
    case ScalarKind::gauss: return mat_to_json_typed(m.as<GaussRational>(), m.kind());
    case ScalarKind::float64: return mat_to_json_typed(m.as<double>(), m.kind());
    case ScalarKind::cfloat64: return mat_to_json_typed(m.as<Complex>(), m.kind());
  }
  throw ParseError("bad matrix kind");
}

AnyMatrix matrix_from_json(const Json& j) {
  const int dim = int_field(j, "dim", "matrix");
  if (dim <= 0) throw ParseError("matrix: 'dim' must be positive");
  const Json& sk = require_field(j, "scalar", "matrix");
  if (!sk.is_string()) throw ParseError("matrix: 'scalar' must be a string");
  const ScalarKind k = kind_from_name(sk.get<std::string>());
  const Json& rows = require_field(j, "entries", "matrix");
  switch (k) {
    case ScalarKind::rational:
      return mat_from_rows<Rational>(rows, dim, k, [](const Scalar& s) { return s.rational(); });
    case ScalarKind::gauss:
      return mat_from_rows<GaussRational>(rows, dim, k,
                                          [](const Scalar& s) { return s.gauss(); });
    case ScalarKind::float64:
      return mat_from_rows<double>(rows, dim, k, [](const Scalar& s) { return s.float64(); });
    case ScalarKind::cfloat64:
      return mat_from_rows<Complex>(rows, dim, k, [](const Scalar& s) { return s.cfloat64(); });
  }
  throw ParseError("bad matrix kind");
}

Json finite_map_to_json(const FiniteMap& s) {
  Json table = Json::array();
  for (const auto& [a, b] : s.table) table.push_back(Json::array({a, b}));
  return Json{{"n", s.n}, {"table", std::move(table)}};
}

FiniteMap finite_map_from_json(const Json& j) {
  FiniteMap s;
  s.n = int_field(j, "n", "map");
  const Json& table = require_field(j, "table", "map");
  if (!table.is_array()) throw ParseError("map: 'table' must be an array of pairs");
  for (const Json& e : table) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("map: table entries must be [a, b] integer pairs");
    s.table.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  s.validate();
  return s;
}

namespace {

ScalarKind exact_kind_of(const Json& j, const char* ctx) {
  if (!j.contains("scalar")) return ScalarKind::rational;
  const Json& sk = j.at("scalar");
  if (!sk.is_string()) throw ParseError(std::string(ctx) + ": 'scalar' must be a string");
  const ScalarKind k = kind_from_name(sk.get<std::string>());
  if (!kind_is_exact(k))
    throw ParseError(std::string(ctx) + ": structure constants must be exact scalars");
  return k;
}

template <class T, class Get>
std::vector<T> cube_from_json(const Json& cube, int dim, ScalarKind k, const char* ctx,
                              const Get& get) {
  if (!cube.is_array() || static_cast<int>(cube.size()) != dim)
    throw ParseError(std::string(ctx) + ": constants must be a dim^3 nested array");
  std::vector<T> out(static_cast<size_t>(dim) * dim * dim);
  for (int i = 0; i < dim; ++i) {
    const Json& plane = cube[i];
    if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
      throw ParseError(std::string(ctx) + ": constants row " + std::to_string(i) +
                       " has the wrong length");
    for (int j2 = 0; j2 < dim; ++j2) {
      const Json& row = plane[j2];
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw ParseError(std::string(ctx) + ": constants row has the wrong length");
      for (int k2 = 0; k2 < dim; ++k2)
        out[(static_cast<size_t>(i) * dim + j2) * dim + k2] =
            get(scalar_entry_from_json(row[k2], k, ctx));
    }
  }
  return out;
}

template <class T, class Get>
std::vector<T> vec_from_json(const Json& v, int dim, ScalarKind k, const char* ctx,
                             const Get& get) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(std::string(ctx) + ": vector must have dim entries");
  std::vector<T> out;
  for (const Json& e : v) out.push_back(get(scalar_entry_from_json(e, k, ctx)));
  return out;
}

template <class T, class Get>
FiniteAlgebraT<T> algebra_typed(const Json& j, ScalarKind k, const Get& get) {
  FiniteAlgebraT<T> a;
  a.dim = int_field(j, "dim", "algebra");
  a.unit = vec_from_json<T>(require_field(j, "unit", "algebra"), a.dim, k, "algebra", get);
  a.mul = cube_from_json<T>(require_field(j, "mul", "algebra"), a.dim, k, "algebra", get);
  a.validate();
  return a;
}

template <class T, class Get>
LieSuperAlgebraT<T> lie_typed(const Json& j, ScalarKind k, const Get& get) {
  LieSuperAlgebraT<T> l;
  l.dim = int_field(j, "dim", "lie");
  const Json& g = require_field(j, "grading", "lie");
  if (!g.is_array() || static_cast<int>(g.size()) != l.dim)
    throw ParseError("lie: 'grading' must have dim entries");
  for (const Json& e : g) {
    if (!e.is_number_integer()) throw ParseError("lie: grading entries must be integers");
    l.grading.push_back(e.get<int>());
  }
  l.bracket = cube_from_json<T>(require_field(j, "bracket", "lie"), l.dim, k, "lie", get);
  l.z = vec_from_json<T>(require_field(j, "z", "lie"), l.dim, k, "lie", get);
  l.validate();
  return l;
}

}  // namespace

AnyAlgebra algebra_from_json(const Json& j) {
  const ScalarKind k = exact_kind_of(j, "algebra");
  if (k == ScalarKind::rational)
    return algebra_typed<Rational>(j, k, [](const Scalar& s) { return s.rational(); });
  return algebra_typed<GaussRational>(j, k, [](const Scalar& s) { return s.gauss(); });
}

AnyLie lie_from_json(const Json& j) {
  const ScalarKind k = exact_kind_of(j, "lie");
  if (k == ScalarKind::rational)
    return lie_typed<Rational>(j, k, [](const Scalar& s) { return s.rational(); });
  return lie_typed<GaussRational>(j, k, [](const Scalar& s) { return s.gauss(); });
}

BilinearStructure bilinear_from_json(const Json& j) {
  BilinearStructure b;
  b.dim = int_field(j, "dim", "structure");
  b.c = cube_from_json<Rational>(require_field(j, "mul", "structure"), b.dim,
                                 ScalarKind::rational, "structure",
                                 [](const Scalar& s) { return s.rational(); });
  b.validate();
  return b;
}

Json bilinear_to_json(const BilinearStructure& b) {
  Json cube = Json::array();
  for (int i = 0; i < b.dim; ++i) {
    Json plane = Json::array();
    for (int j2 = 0; j2 < b.dim; ++j2) {
      Json row = Json::array();
      for (int k2 = 0; k2 < b.dim; ++k2) row.push_back(to_string(b.at(i, j2, k2)));
      plane.push_back(std::move(row));
    }
    cube.push_back(std::move(plane));
  }
  return Json{{"dim", b.dim}, {"mul", std::move(cube)}};
}

FunctionalSpec functional_from_json(const Json& j) {
  FunctionalSpec spec;
  spec.dim = int_field(j, "dim", "functional");
  auto rat_of = [](const Scalar& s) { return s.rational(); };
  spec.f = vec_from_json<Rational>(require_field(j, "f", "functional"), spec.dim,
                                   ScalarKind::rational, "functional", rat_of);
  if (j.contains("e"))
    spec.e = vec_from_json<Rational>(j.at("e"), spec.dim, ScalarKind::rational, "functional",
                                     rat_of);
  auto opt_rat = [&](const char* f, Rational dflt) {
    if (!j.contains(f)) return dflt;
    return scalar_entry_from_json(j.at(f), ScalarKind::rational, "functional").rational();
  };
  spec.alpha = opt_rat("alpha", rat(1));
  spec.beta = opt_rat("beta", rat(1));
  return spec;
}

ColorFunctionTriple color_triple_from_json(const Json& j) {
  const Json& kind = require_field(j, "kind", "color functions");
  if (!kind.is_string()) throw ParseError("color functions: 'kind' must be a string");
  const std::string ks = kind.get<std::string>();
  if (ks == "constant") {
    auto get = [&](const char* f) {
      return scalar_entry_from_json(require_field(j, f, "color functions"),
                                    ScalarKind::rational, "color functions")
          .rational();
    };
    return ColorFunctionTriple::constants(get("alpha"), get("beta"), get("gamma"));
  }
  if (ks == "named") {
    const Json& n = require_field(j, "name", "color functions");
    if (!n.is_string()) throw ParseError("color functions: 'name' must be a string");
    return ColorFunctionTriple::named(n.get<std::string>());
  }
  if (ks == "table") {
    ColorFunctionTriple t;
    t.kind = ColorFunctionTriple::Kind::table;
    auto rat_of = [](const Scalar& s) { return s.rational(); };
    const Json& colors = require_field(j, "colors", "color functions");
    if (!colors.is_array() || colors.empty())
      throw ParseError("color functions: 'colors' must be a nonempty array");
    for (const Json& e : colors)
      t.table.colors.push_back(
          scalar_entry_from_json(e, ScalarKind::rational, "color functions").rational());
    const int c = static_cast<int>(t.table.colors.size());
    auto grid = [&](const char* f) {
      std::vector<Rational> out;
      const Json& g = require_field(j, f, "color functions");
      if (!g.is_array() || static_cast<int>(g.size()) != c)
        throw ParseError(std::string("color functions: '") + f + "' must be a " +
                         std::to_string(c) + "x" + std::to_string(c) + " array");
      for (const Json& row : g) {
        if (!row.is_array() || static_cast<int>(row.size()) != c)
          throw ParseError(std::string("color functions: '") + f + "' row length mismatch");
        for (const Json& e : row)
          out.push_back(
              scalar_entry_from_json(e, ScalarKind::rational, "color functions").rational());
      }
      return out;
    };
    t.table.alpha = grid("alpha");
    t.table.beta = grid("beta");
    t.table.gamma = grid("gamma");
    t.table.validate();
    return t;
  }
  throw ParseError("color functions: unknown kind '" + ks + "'");
}

Json norm_to_json(const Norm& n) {
  Json j{{"exact", n.exact}, {"magnitude", n.magnitude}};
  j["zero"] = n.zero;
  return j;
}

Json yb_report_to_json(const YbReport& r) {
  Json j{{"form", form_name(r.form)},
         {"residual", norm_to_json(r.residual)},
         {"invertible", r.invertible}};
  if (r.witness) {
    const auto& [row, col, val] = *r.witness;
    j["witness"] = Json{{"row", row}, {"col", col}, {"value", val}};
  }
  return j;
}

Json set_report_to_json(const SetYbReport& r) {
  Json j{{"form", form_name(r.form)},
         {"verdict", r.pass ? "pass" : "fail"},
         {"triples_checked", r.triples_checked}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = Json{{"input", c.input}, {"left", c.lhs}, {"right", c.rhs}};
  }
  return j;
}

Json enumeration_to_json(const EnumerationResult& r, bool include_solutions) {
  Json j{{"n", r.summary.n},
         {"form", form_name(r.summary.form)},
         {"up_to_iso", r.summary.up_to_iso},
         {"count", r.summary.count},
         {"count_up_to_iso", r.summary.count_up_to_iso},
         {"runtime_ms", r.summary.runtime_ms}};
  if (include_solutions) {
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(finite_map_to_json(s));
    j["solutions"] = std::move(sols);
  }
  return j;
}

Json symmetry_to_json(const SymmetryReport& r) {
  return Json{{"closure", r.closure},
              {"klein_subgroup", r.klein_subgroup},
              {"planes_compose_to_point_reflection", r.planes_to_point},
              {"axes_compose_to_identity", r.axes_to_identity},
              {"verdict", r.pass ? "pass" : "fail"}};
}

Json exp_morphism_to_json(const ExpMorphismReport& r) {
  return Json{{"symbolic", r.symbolic_pass ? "pass" : "fail"},
              {"numeric", r.numeric_pass ? "pass" : "fail"},
              {"max_rel_err", r.max_rel_err},
              {"samples", r.samples}};
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j{{"cyclic", r.cyclic},
         {"degree", Json::array({r.degree[0], r.degree[1], r.degree[2], r.degree[3]})},
         {"commutative", r.commutative},
         {"anticommutative", r.anticommutative},
         {"associative", r.associative},
         {"jacobi", r.jacobi},
         {"jordan_identity", r.jordan_identity},
         {"is_ujla", r.is_ujla},
         {"is_lie", r.is_lie},
         {"is_jordan", r.is_jordan},
         {"is_associative", r.is_associative}};
  if (!r.witnesses.empty()) {
    Json w = Json::object();
    for (const auto& [flag, vecs] : r.witnesses) {
      Json arr = Json::array();
      for (const auto& v : vecs) {
        Json vv = Json::array();
        for (const auto& x : v) vv.push_back(to_string(x));
        arr.push_back(std::move(vv));
      }
      w[flag] = std::move(arr);
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json thm41_to_json(const Thm41Result& r, size_t max_rows) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    if (rows.size() >= max_rows) break;
    rows.push_back(Json{{"n", row.n},
                        {"lhs", to_string(row.lhs)},
                        {"rhs", to_string(row.rhs)},
                        {"lhs_decimal", rational_decimal(row.lhs, 6)},
                        {"rhs_decimal", rational_decimal(row.rhs, 6)},
                        {"verdict", row.verdict}});
  }
  return Json{{"rows_shown", rows.size()},
              {"rows_total", r.rows.size()},
              {"rows", std::move(rows)},
              {"all_true", r.all_true},
              {"replay_consistent", r.replay_consistent},
              {"basel_cap", to_string(r.basel_cap)},
              {"pi2_over_6_low", rational_decimal(r.pi26_lo, 30)},
              {"pi2_over_6_high", rational_decimal(r.pi26_hi, 30)}};
}

Json margins_to_json(const std::vector<MarginReport>& ms, int digits) {
  Json rows = Json::array();
  for (const auto& m : ms) {
    std::string hp = m.value_hp;
    // value_hp carries 50 significant digits; trim the display if asked.
    rows.push_back(Json{{"name", m.name},
                        {"value_float64", m.value},
                        {"value_highprec", digits >= 50 ? hp : hp.substr(0, digits + 8)},
                        {"sign", m.sign},
                        {"sign_stable_to_100_digits", m.sign_stable},
                        {"note", m.note}});
  }
  return Json{{"margins", std::move(rows)}};
}

Json audit_to_json(const AuditResult& a) {
  Json rows = Json::array();
  for (const auto& r : a.rows)
    rows.push_back(Json{{"claim", r.name},
                        {"category", r.category},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"match", r.match},
                        {"detail", r.detail},
                        {"ms", r.ms}});
  return Json{{"claims", std::move(rows)}, {"all_match", a.all_match}};
}

}  // namespace ybx
