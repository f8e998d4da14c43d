#include "ybx/matrix.hpp"

namespace ybx {

const char* leg_name(Leg l) {
  switch (l) {
    case Leg::l12: return "12";
    case Leg::l23: return "23";
    case Leg::l13: return "13";
  }
  return "?";
}

Leg leg_from_name(std::string_view s) {
  if (s == "12") return Leg::l12;
  if (s == "23") return Leg::l23;
  if (s == "13") return Leg::l13;
  throw ParseError("bad legs '" + std::string(s) + "' (want 12, 23 or 13)");
}

namespace {
[[noreturn]] void kind_clash(const AnyMatrix& a, const AnyMatrix& b) {
  throw KindError(std::string("matrix kind mismatch: ") + kind_name(a.kind()) + " vs " +
                  kind_name(b.kind()));
}
}  // namespace

AnyMatrix kron(const AnyMatrix& a, const AnyMatrix& b) {
  if (a.kind() != b.kind()) kind_clash(a, b);
  switch (a.kind()) {
    case ScalarKind::rational: return kron(a.as<Rational>(), b.as<Rational>());
    case ScalarKind::gauss: return kron(a.as<GaussRational>(), b.as<GaussRational>());
    case ScalarKind::float64: return kron(a.as<double>(), b.as<double>());
    case ScalarKind::cfloat64: return kron(a.as<Complex>(), b.as<Complex>());
  }
  kind_clash(a, b);
}

AnyMatrix lift(const AnyMatrix& r, int d, Leg leg) {
  return r.visit([&](const auto& m) { return AnyMatrix(lift(m, d, leg)); });
}

AnyMatrix mul(const AnyMatrix& a, const AnyMatrix& b) {
  if (a.kind() != b.kind()) kind_clash(a, b);
  if (a.dim() != b.dim()) throw DimError("matrix dimension mismatch");
  switch (a.kind()) {
    case ScalarKind::rational: return a.as<Rational>() * b.as<Rational>();
    case ScalarKind::gauss: return a.as<GaussRational>() * b.as<GaussRational>();
    case ScalarKind::float64: return a.as<double>() * b.as<double>();
    case ScalarKind::cfloat64: return a.as<Complex>() * b.as<Complex>();
  }
  kind_clash(a, b);
}

AnyMatrix mat_exp(const AnyMatrix& a) {
  switch (a.kind()) {
    case ScalarKind::float64: return mat_exp(a.as<double>());
    case ScalarKind::cfloat64: return mat_exp(a.as<Complex>());
    default:
      throw KindError(std::string("mat_exp needs a float kind, got ") + kind_name(a.kind()));
  }
}

Norm norm_of(const AnyMatrix& m) {
  return m.visit([](const auto& mm) { return norm_of(mm); });
}

AnyMatrix twist_any(ScalarKind k, int d) {
  switch (k) {
    case ScalarKind::rational: return twist_matrix<Rational>(d);
    case ScalarKind::gauss: return twist_matrix<GaussRational>(d);
    case ScalarKind::float64: return twist_matrix<double>(d);
    case ScalarKind::cfloat64: return twist_matrix<Complex>(d);
  }
  throw KindError("bad scalar kind");
}

}  // namespace ybx
