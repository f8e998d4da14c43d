// ybx — checks, constructions and audits for Yang-Baxter operators and
// related nonassociative structures.  See README.md for the command map.
//
// Exit codes: 0 all requested checks passed, 1 a check evaluated and failed
// (counterexample in the payload), 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybx/json_io.hpp"

namespace {

using ybx::Json;

constexpr const char* kVersion = "0.1.0";
// Float-kind residuals cannot be exactly zero; exact kinds must be.
constexpr double kFloatCheckTol = 1e-9;
constexpr double kColoredTol = 1e-9;
constexpr double kJSquareTol = 1e-13;

struct Outcome {
  Json result;
  bool pass = false;
  std::string convention = "n/a";
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ybx::ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ybx::ParseError("'" + path + "': " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ybx::ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::array<ybx::Rational, 3> parse_rational_triple(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw ybx::ParseError("expected three comma-separated values");
  return {ybx::rational_from_string(parts[0]), ybx::rational_from_string(parts[1]),
          ybx::rational_from_string(parts[2])};
}

bool residual_ok(const ybx::Norm& n) {
  if (n.exact) return n.zero;
  return n.magnitude <= kFloatCheckTol;
}

int infer_base_dim(int dim) {
  for (int d = 1; d * d <= dim; ++d)
    if (d * d == dim) return d;
  throw ybx::ParseError("matrix dimension " + std::to_string(dim) +
                        " is not a square; pass --d explicitly");
}

// ---- check ----

Outcome run_check_linear(const std::string& matrix_path, int d, ybx::Form form) {
  const ybx::AnyMatrix m = ybx::matrix_from_json(load_json(matrix_path));
  if (d == 0) d = infer_base_dim(m.dim());
  const ybx::YbReport rep = ybx::yb_residual(m, d, form);
  Outcome o;
  o.convention = ybx::form_name(form);
  o.pass = residual_ok(rep.residual);
  o.result = Json{{"d", d},
                  {"dim", m.dim()},
                  {"scalar", ybx::kind_name(m.kind())},
                  {"check", ybx::yb_report_to_json(rep)}};
  return o;
}

Outcome run_check_set(const std::string& map_path, const std::string& family,
                      const std::string& alpha, const std::string& beta, ybx::Form form) {
  Outcome o;
  o.convention = ybx::form_name(form);
  if (!map_path.empty()) {
    const ybx::FiniteMap s = ybx::finite_map_from_json(load_json(map_path));
    const ybx::SetYbReport rep = ybx::set_yb_check(s, form);
    o.pass = rep.pass;
    o.result = Json{{"n", s.n}, {"check", ybx::set_report_to_json(rep)}};
    return o;
  }
  if (family.empty())
    throw ybx::ParseError("check set: pass --map FILE or --family NAME");
  ybx::ClosedFormFamily f;
  f.kind = ybx::family_kind_from_name(family);
  const ybx::ScalarKind pk =
      f.kind == ybx::FamilyKind::linear ? ybx::ScalarKind::gauss : ybx::ScalarKind::rational;
  f.alpha = ybx::Scalar::parse(alpha, pk);
  f.beta = ybx::Scalar::parse(beta, pk);
  const auto triples = ybx::default_family_triples(f.kind);
  const ybx::SetYbReport rep = ybx::check_family(f, form, triples);
  o.pass = rep.pass;
  o.result = Json{{"family", ybx::family_kind_name(f.kind)},
                  {"alpha", f.alpha.str()},
                  {"beta", f.beta.str()},
                  {"check", ybx::set_report_to_json(rep)}};
  return o;
}

Outcome run_check_colored(double alpha, int samples, const std::string& functions_path,
                          const std::string& grid) {
  Outcome o;
  if (!grid.empty()) {
    // Five-equation color system on every triple from the grid.
    if (functions_path.empty())
      throw ybx::ParseError("check colored: --grid requires --functions FILE");
    const ybx::ColorFunctionTriple fns =
        ybx::color_triple_from_json(load_json(functions_path));
    std::vector<ybx::Rational> colors;
    for (const auto& p : split_commas(grid)) colors.push_back(ybx::rational_from_string(p));
    if (colors.empty()) throw ybx::ParseError("check colored: empty --grid");
    o.convention = "braid";
    std::uint64_t triples = 0;
    Json first_failure;
    bool all_zero = true;
    for (const auto& u : colors)
      for (const auto& v : colors)
        for (const auto& w : colors) {
          ++triples;
          const auto res = ybx::yb_system_residuals(fns, u, v, w);
          bool zero = true;
          for (const auto& r : res) zero = zero && r == 0;
          if (!zero && all_zero) {
            all_zero = false;
            Json rs = Json::array();
            for (const auto& r : res) rs.push_back(ybx::to_string(r));
            first_failure = Json{{"colors", Json::array({ybx::to_string(u), ybx::to_string(v),
                                                         ybx::to_string(w)})},
                                 {"residuals", std::move(rs)}};
          }
        }
    o.pass = all_zero;
    o.result = Json{{"colors", colors.size()}, {"triples", triples}, {"all_zero", all_zero}};
    if (!all_zero) o.result["counterexample"] = std::move(first_failure);
    return o;
  }

  const ybx::JSpec spec{alpha};
  spec.validate();
  o.convention = "braid";
  const ybx::Mat<ybx::Complex> j = ybx::build_j(spec);
  ybx::Mat<ybx::Complex> j2 = j * j;
  for (int i = 0; i < j2.dim(); ++i) j2(i, i) += 1.0;
  const double j2_norm = ybx::max_abs(j2);
  const double euler = ybx::euler_check(spec).magnitude;
  double max_res = 0.0;
  for (const auto& [x, y] : ybx::colored_sample_points(samples))
    max_res = std::max(max_res, ybx::colored_residual(spec, x, y).magnitude);
  o.pass = j2_norm <= kJSquareTol && euler <= kColoredTol && max_res <= kColoredTol;
  o.result = Json{{"alpha", alpha},
                  {"samples", samples},
                  {"j_square_plus_identity", j2_norm},
                  {"euler_residual", euler},
                  {"max_sample_residual", max_res},
                  {"tolerance", kColoredTol}};
  return o;
}

Outcome run_check_ujla(const std::string& structure_path, const std::string& expect) {
  const ybx::BilinearStructure b = ybx::bilinear_from_json(load_json(structure_path));
  const ybx::AxiomReport rep = ybx::classify(b);
  bool pass = false;
  if (expect == "ujla")
    pass = rep.is_ujla;
  else if (expect == "lie")
    pass = rep.is_lie;
  else if (expect == "jordan")
    pass = rep.is_jordan;
  else if (expect == "assoc")
    pass = rep.is_associative;
  else
    throw ybx::ParseError("check ujla: --expect must be ujla|lie|jordan|assoc");
  Outcome o;
  o.pass = pass;
  o.result = Json{{"dim", b.dim}, {"expect", expect}, {"axioms", ybx::axiom_report_to_json(rep)}};
  return o;
}

// ---- build ----

template <class T>
Outcome finish_build(ybx::Mat<T> r, int d, ybx::Form form, const std::string& out_path,
                     Json extra) {
  const ybx::YbReport rep = ybx::yb_residual(r, d, form);
  const Json mj = ybx::matrix_to_json(ybx::AnyMatrix(std::move(r)));
  if (!out_path.empty()) write_json(out_path, mj);
  Outcome o;
  o.convention = ybx::form_name(form);
  o.pass = residual_ok(rep.residual);
  o.result = Json{{"matrix", mj}, {"check", ybx::yb_report_to_json(rep)}};
  o.result.update(extra);
  return o;
}

Outcome run_build_assoc(const std::string& algebra_path, const std::string& named,
                        const std::string& params, ybx::Form form,
                        const std::string& out_path) {
  const auto parts = split_commas(params);
  if (parts.size() != 3)
    throw ybx::ParseError("build assoc: --params needs alpha,beta,gamma");
  ybx::AnyAlgebra alg;
  if (!named.empty()) {
    auto a = ybx::named_algebra(named);
    if (!a) throw ybx::ParseError("unknown algebra '" + named + "' (k|dual|m2|kxk)");
    alg = std::move(*a);
  } else if (!algebra_path.empty()) {
    alg = ybx::algebra_from_json(load_json(algebra_path));
  } else {
    throw ybx::ParseError("build assoc: pass --algebra FILE or --named NAME");
  }

  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a.unit[0])>;
        const ybx::ScalarKind pk = std::is_same_v<T, ybx::GaussRational>
                                       ? ybx::ScalarKind::gauss
                                       : ybx::ScalarKind::rational;
        std::array<ybx::Scalar, 3> ps = {ybx::Scalar::parse(parts[0], pk),
                                         ybx::Scalar::parse(parts[1], pk),
                                         ybx::Scalar::parse(parts[2], pk)};
        auto as_t = [&](const ybx::Scalar& s) -> T {
          if constexpr (std::is_same_v<T, ybx::GaussRational>)
            return s.gauss();
          else
            return s.rational();
        };
        ybx::Mat<T> r = ybx::build_r_assoc(a, as_t(ps[0]), as_t(ps[1]), as_t(ps[2]));
        Json extra{{"param_case",
                    ybx::param_case_name(ybx::yb_param_case(ps[0], ps[1], ps[2]))}};
        return finish_build(std::move(r), a.dim, form, out_path, std::move(extra));
      },
      alg);
}

Outcome run_build_lie(const std::string& lie_path, const std::string& named,
                      const std::string& alpha, ybx::Form form, const std::string& out_path) {
  ybx::AnyLie lie;
  if (!named.empty()) {
    auto l = ybx::named_lie(named);
    if (!l)
      throw ybx::ParseError("unknown Lie structure '" + named +
                            "' (heisenberg|abelian3|abelian-super|super-osc)");
    lie = std::move(*l);
  } else if (!lie_path.empty()) {
    lie = ybx::lie_from_json(load_json(lie_path));
  } else {
    throw ybx::ParseError("build lie: pass --lie FILE or --named NAME");
  }

  return std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l.z[0])>;
        T a;
        if constexpr (std::is_same_v<T, ybx::GaussRational>)
          a = ybx::gauss_from_string(alpha);
        else
          a = ybx::rational_from_string(alpha);
        ybx::Mat<T> r = ybx::build_r_lie(l, a);
        return finish_build(std::move(r), l.dim, form, out_path, Json::object());
      },
      lie);
}

Outcome structure_outcome(const ybx::BilinearStructure& s, const char* verdict_flag,
                          const std::string& out_path, Json extra) {
  const ybx::AxiomReport rep = ybx::classify(s);
  bool pass = false;
  const std::string flag = verdict_flag;
  if (flag == "is_ujla") pass = rep.is_ujla;
  if (flag == "is_lie") pass = rep.is_lie;
  if (flag == "is_jordan") pass = rep.is_jordan;
  if (flag == "is_associative") pass = rep.is_associative;
  const Json sj = ybx::bilinear_to_json(s);
  if (!out_path.empty()) write_json(out_path, sj);
  Outcome o;
  o.pass = pass;
  o.result = Json{{"structure", sj},
                  {"claimed", flag},
                  {"axioms", ybx::axiom_report_to_json(rep)}};
  o.result.update(extra);
  return o;
}

Outcome run_build_functional(const std::string& spec_path, const std::string& kind_name,
                             const std::string& out_path) {
  const ybx::FunctionalKind kind = ybx::functional_kind_from_name(kind_name);
  const ybx::FunctionalSpec spec = ybx::functional_from_json(load_json(spec_path));
  const ybx::BuiltStructure built = ybx::from_functional(spec, kind);
  const char* flag = nullptr;
  switch (kind) {
    case ybx::FunctionalKind::assoc: flag = "is_associative"; break;
    case ybx::FunctionalKind::lie: flag = "is_lie"; break;
    case ybx::FunctionalKind::jordan: flag = "is_jordan"; break;
    case ybx::FunctionalKind::ujla: flag = "is_ujla"; break;
  }
  Json extra{{"kind", kind_name}};
  if (built.unit) {
    Json u = Json::array();
    for (const auto& x : *built.unit) u.push_back(ybx::to_string(x));
    extra["unit"] = std::move(u);
  }
  return structure_outcome(built.s, flag, out_path, std::move(extra));
}

Outcome run_build_endo(int d, const std::string& p, const std::string& q,
                       const std::string& out_path) {
  const ybx::BilinearStructure s =
      ybx::endo_structure(ybx::rational_from_string(p), ybx::rational_from_string(q), d);
  return structure_outcome(s, "is_ujla", out_path,
                           Json{{"d", d}, {"p", p}, {"q", q}});
}

// ---- set enumerate / transc / audit ----

Outcome run_enumerate(int n, ybx::Form form, bool up_to_iso, const std::string& list_path) {
  const ybx::EnumerationResult res = ybx::enumerate_solutions(n, form, up_to_iso);
  if (!list_path.empty()) write_json(list_path, ybx::enumeration_to_json(res, true));
  Outcome o;
  o.convention = ybx::form_name(form);
  o.pass = true;
  o.result = ybx::enumeration_to_json(res, false);
  return o;
}

Outcome run_thm41(unsigned long n_max, unsigned long rows) {
  const ybx::Thm41Result res = ybx::thm41_check(n_max);
  Outcome o;
  o.pass = res.all_true && res.replay_consistent;
  o.result = ybx::thm41_to_json(res, rows);
  return o;
}

Outcome run_margins(int digits) {
  const auto ms = ybx::transcendental_margins();
  bool stable = true;
  for (const auto& m : ms) stable = stable && m.sign_stable;
  Outcome o;
  o.pass = stable;
  o.result = ybx::margins_to_json(ms, digits);
  return o;
}

std::map<std::string, std::string> manifest_from(const std::string& path) {
  if (path.empty()) return ybx::default_expected_manifest();
  const Json j = load_json(path);
  const Json& claims = ybx::require_field(j, "claims", "manifest");
  if (!claims.is_object()) throw ybx::ParseError("manifest: 'claims' must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : claims.items()) {
    if (!v.is_string()) throw ybx::ParseError("manifest: status for '" + k + "' must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

Outcome run_audit_triple(const std::string& claim, const std::string& triple) {
  if (claim != "thm35")
    throw ybx::ParseError("--triple probes the quotient-square map and needs claim 'thm35'");
  const auto t = parse_rational_triple(triple);
  ybx::ClosedFormFamily fam;
  fam.kind = ybx::FamilyKind::quotient_square;
  std::vector<std::array<ybx::Scalar, 3>> ts = {
      {ybx::Scalar(t[0]), ybx::Scalar(t[1]), ybx::Scalar(t[2])}};
  const ybx::SetYbReport braid = ybx::check_family(fam, ybx::Form::braid, ts);
  const ybx::SetYbReport qybe = ybx::check_family(fam, ybx::Form::qybe, ts);
  Outcome o;
  o.convention = "braid";
  o.pass = braid.pass && qybe.pass;
  o.result = Json{{"claim", claim},
                  {"map", "(x, y) -> (x/y, x^2)"},
                  {"triple", Json::array({ybx::to_string(t[0]), ybx::to_string(t[1]),
                                          ybx::to_string(t[2])})},
                  {"braid", ybx::set_report_to_json(braid)},
                  {"qybe", ybx::set_report_to_json(qybe)}};
  return o;
}

Outcome run_audit(const std::string& claim, const std::string& triple,
                  const std::string& only, const std::string& manifest_path) {
  if (!triple.empty()) return run_audit_triple(claim, triple);
  const auto expected = manifest_from(manifest_path);
  Outcome o;
  o.convention = "braid";
  if (!claim.empty()) {
    const ybx::RawClaim raw = ybx::run_audit_claim(claim);
    const auto it = expected.find(claim);
    if (it == expected.end())
      throw ybx::ParseError("manifest has no expected status for '" + claim + "'");
    const std::string observed = raw.pass ? "holds" : "fails-as-stated";
    o.pass = observed == it->second;
    o.result = Json{{"claim", claim},
                    {"expected", it->second},
                    {"observed", observed},
                    {"match", o.pass},
                    {"detail", raw.detail}};
    return o;
  }
  if (!only.empty() && only != "linear" && only != "set" && only != "colored" &&
      only != "transc" && only != "ujla")
    throw ybx::ParseError("--only must be linear|set|colored|transc|ujla");
  const ybx::AuditResult res = ybx::audit_all(expected, only);
  o.pass = res.all_match;
  o.result = ybx::audit_to_json(res);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter equation toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::optional<Outcome> outcome;
  std::string command;
  std::string json_out;

  auto form_opt = [](CLI::App* cmd, std::string& form) {
    cmd->add_option("--form", form, "equation form: braid | qybe")
        ->default_val("braid")
        ->check(CLI::IsMember({"braid", "qybe"}));
  };

  // check
  auto* check = app.add_subcommand("check", "verify a structure against its law");
  check->require_subcommand(1);
  {
    auto* c = check->add_subcommand("linear", "matrix Yang-Baxter check");
    auto matrix = std::make_shared<std::string>();
    auto d = std::make_shared<int>(0);
    auto form = std::make_shared<std::string>();
    c->add_option("--matrix", *matrix, "matrix JSON file")->required();
    c->add_option("--d", *d, "base dimension (default: inferred)");
    form_opt(c, *form);
    c->callback([&, matrix, d, form] {
      command = "check linear";
      outcome = run_check_linear(*matrix, *d, ybx::form_from_name(*form));
    });
  }
  {
    auto* c = check->add_subcommand("set", "set-theoretic check: a map file or a family");
    auto map = std::make_shared<std::string>();
    auto family = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto beta = std::make_shared<std::string>("1");
    auto form = std::make_shared<std::string>();
    c->add_option("--map", *map, "finite map JSON file");
    c->add_option("--family", *family,
                  "power | linear | quotient-square | logic | minmax | gcdlcm");
    c->add_option("--alpha", *alpha, "family parameter");
    c->add_option("--beta", *beta, "family parameter");
    form_opt(c, *form);
    c->callback([&, map, family, alpha, beta, form] {
      command = "check set";
      outcome = run_check_set(*map, *family, *alpha, *beta, ybx::form_from_name(*form));
    });
  }
  {
    auto* c = check->add_subcommand("colored", "colored operator or color-function system");
    auto alpha = std::make_shared<double>(1.0);
    auto samples = std::make_shared<int>(25);
    auto functions = std::make_shared<std::string>();
    auto grid = std::make_shared<std::string>();
    c->add_option("--alpha", *alpha, "J parameter (nonzero)");
    c->add_option("--samples", *samples, "sample count in [-pi,pi]^2")
        ->check(CLI::PositiveNumber);
    c->add_option("--functions", *functions, "color-function triple JSON file");
    c->add_option("--grid", *grid, "comma-separated rational colors (system mode)");
    c->callback([&, alpha, samples, functions, grid] {
      command = "check colored";
      outcome = run_check_colored(*alpha, *samples, *functions, *grid);
    });
  }
  {
    auto* c = check->add_subcommand("ujla", "classify a bilinear structure");
    auto structure = std::make_shared<std::string>();
    auto expect = std::make_shared<std::string>("ujla");
    c->add_option("--structure", *structure, "structure-constant JSON file")->required();
    c->add_option("--expect", *expect, "ujla | lie | jordan | assoc");
    c->callback([&, structure, expect] {
      command = "check ujla";
      outcome = run_check_ujla(*structure, *expect);
    });
  }

  // build
  auto* build = app.add_subcommand("build", "construct an operator or structure, then check it");
  build->require_subcommand(1);
  {
    auto* c = build->add_subcommand("assoc", "operator from a unital associative algebra");
    auto algebra = std::make_shared<std::string>();
    auto named = std::make_shared<std::string>();
    auto params = std::make_shared<std::string>();
    auto form = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--algebra", *algebra, "algebra JSON file");
    c->add_option("--named", *named, "k | dual | m2 | kxk");
    c->add_option("--params", *params, "alpha,beta,gamma")->required();
    form_opt(c, *form);
    c->add_option("--out", *out, "write the matrix JSON here");
    c->callback([&, algebra, named, params, form, out] {
      command = "build assoc";
      outcome = run_build_assoc(*algebra, *named, *params, ybx::form_from_name(*form), *out);
    });
  }
  {
    auto* c = build->add_subcommand("lie", "operator from a Lie superalgebra");
    auto lie = std::make_shared<std::string>();
    auto named = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto form = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--lie", *lie, "Lie superalgebra JSON file");
    c->add_option("--named", *named, "heisenberg | abelian3 | abelian-super | super-osc");
    c->add_option("--alpha", *alpha, "scalar parameter");
    form_opt(c, *form);
    c->add_option("--out", *out, "write the matrix JSON here");
    c->callback([&, lie, named, alpha, form, out] {
      command = "build lie";
      outcome = run_build_lie(*lie, *named, *alpha, ybx::form_from_name(*form), *out);
    });
  }
  {
    auto* c = build->add_subcommand("functional", "structure from a linear functional");
    auto spec = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--spec", *spec, "functional JSON file")->required();
    c->add_option("--kind", *kind, "assoc | lie | jordan | ujla")->required();
    c->add_option("--out", *out, "write the structure JSON here");
    c->callback([&, spec, kind, out] {
      command = "build functional";
      outcome = run_build_functional(*spec, *kind, *out);
    });
  }
  {
    auto* c = build->add_subcommand("endo", "twisted endomorphism structure on End(k^d)");
    auto d = std::make_shared<int>(2);
    auto p = std::make_shared<std::string>("1");
    auto q = std::make_shared<std::string>("1");
    auto out = std::make_shared<std::string>();
    c->add_option("--d", *d, "base dimension, 1..3");
    c->add_option("--p", *p, "composition coefficient");
    c->add_option("--q", *q, "reversed-composition coefficient");
    c->add_option("--out", *out, "write the structure JSON here");
    c->callback([&, d, p, q, out] {
      command = "build endo";
      outcome = run_build_endo(*d, *p, *q, *out);
    });
  }

  // set enumerate
  auto* setcmd = app.add_subcommand("set", "set-theoretic solution search");
  setcmd->require_subcommand(1);
  {
    auto* c = setcmd->add_subcommand("enumerate", "exhaustive solution count, n <= 3");
    auto size = std::make_shared<int>();
    auto form = std::make_shared<std::string>();
    auto iso = std::make_shared<bool>(false);
    auto list = std::make_shared<std::string>();
    c->add_option("--size", *size, "underlying set size, 1..3")->required();
    form_opt(c, *form);
    c->add_flag("--up-to-iso", *iso, "keep canonical representatives only");
    c->add_option("--list", *list, "write the full solution list here");
    c->callback([&, size, form, iso, list] {
      command = "set enumerate";
      outcome = run_enumerate(*size, ybx::form_from_name(*form), *iso, *list);
    });
  }

  // transc
  auto* transc = app.add_subcommand("transc", "exact inequality checks and margin tables");
  transc->require_subcommand(1);
  {
    auto* c = transc->add_subcommand("thm41", "partial sums vs the closed-form bound");
    auto n_max = std::make_shared<unsigned long>();
    auto rows = std::make_shared<unsigned long>(10);
    c->add_option("--n-max", *n_max, "check all n up to this")->required();
    c->add_option("--rows", *rows, "rows to include in the report");
    c->callback([&, n_max, rows] {
      command = "transc thm41";
      outcome = run_thm41(*n_max, *rows);
    });
  }
  {
    auto* c = transc->add_subcommand("margins", "signed margins of the inequality table");
    auto digits = std::make_shared<int>(50);
    c->add_option("--digits", *digits, "printed digits, 5..50")->check(CLI::Range(5, 50));
    c->callback([&, digits] {
      command = "transc margins";
      outcome = run_margins(*digits);
    });
  }

  // audit
  {
    auto* c = app.add_subcommand("audit", "evaluate source claims against expected statuses");
    auto claim = std::make_shared<std::string>();
    auto triple = std::make_shared<std::string>();
    auto only = std::make_shared<std::string>();
    auto manifest = std::make_shared<std::string>();
    c->add_option("claim", *claim, "single claim name (default: all)");
    c->add_option("--triple", *triple, "probe triple a,b,c (claim thm35)");
    c->add_option("--only", *only, "category filter: linear|set|colored|transc|ujla");
    c->add_option("--json", json_out, "also write the report envelope here");
    c->add_option("--manifest", *manifest, "expected-status manifest JSON file");
    c->callback([&, claim, triple, only, manifest] {
      command = "audit";
      outcome = run_audit(*claim, *triple, *only, *manifest);
    });
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ybx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!outcome) {
    std::cerr << "error: no command ran\n";
    return 2;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  Json envelope{{"command", command},
                {"version", kVersion},
                {"convention", outcome->convention},
                {"result", outcome->result},
                {"verdict", outcome->pass ? "pass" : "fail"},
                {"wall_ms", wall_ms}};
  std::cout << envelope.dump(2) << "\n";
  if (!json_out.empty()) {
    try {
      write_json(json_out, envelope);
    } catch (const ybx::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return outcome->pass ? 0 : 1;
}
