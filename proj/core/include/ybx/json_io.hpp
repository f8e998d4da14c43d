#pragma once

#include <variant>

#include "json.hpp"
#include "ybx/audit.hpp"
#include "ybx/colored_yb.hpp"
#include "ybx/linear_yb.hpp"
#include "ybx/set_yb.hpp"
#include "ybx/transc.hpp"
#include "ybx/ujla.hpp"

namespace ybx {

using Json = nlohmann::json;

// Matrices: {"dim": n, "scalar": kind, "entries": [[...]]}.  Exact kinds use
// canonical strings, float uses JSON numbers, cfloat uses [re, im] pairs.
// Round-trip is bit-exact for exact kinds.
Json matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const Json& j);

Json finite_map_to_json(const FiniteMap& s);
FiniteMap finite_map_from_json(const Json& j);

// Structure-constant inputs; "scalar" optional ("rational" default, "gauss").
using AnyAlgebra = std::variant<FiniteAlgebraT<Rational>, FiniteAlgebraT<GaussRational>>;
using AnyLie = std::variant<LieSuperAlgebraT<Rational>, LieSuperAlgebraT<GaussRational>>;
AnyAlgebra algebra_from_json(const Json& j);
AnyLie lie_from_json(const Json& j);

BilinearStructure bilinear_from_json(const Json& j);
Json bilinear_to_json(const BilinearStructure& b);
FunctionalSpec functional_from_json(const Json& j);

ColorFunctionTriple color_triple_from_json(const Json& j);

Json norm_to_json(const Norm& n);
Json yb_report_to_json(const YbReport& r);
Json set_report_to_json(const SetYbReport& r);
Json enumeration_to_json(const EnumerationResult& r, bool include_solutions);
Json symmetry_to_json(const SymmetryReport& r);
Json exp_morphism_to_json(const ExpMorphismReport& r);
Json axiom_report_to_json(const AxiomReport& r);
Json thm41_to_json(const Thm41Result& r, size_t max_rows);
Json margins_to_json(const std::vector<MarginReport>& ms, int digits);
Json audit_to_json(const AuditResult& a);

// Pulls "field" or throws ParseError naming it.
const Json& require_field(const Json& j, const char* field, const char* ctx);

}  // namespace ybx
