#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

// Base for everything thrown on bad *input*; callers that map errors to exit
// codes can catch this one type.  Logic bugs still surface as assertions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing scalar kinds (rational with float, gauss with cfloat, ...).
struct KindError : Error {
  using Error::Error;
};

// Shape mismatches: non-square tables, d^2 != dim(r), incompatible products.
struct DimError : Error {
  using Error::Error;
};

// Structural data that fails its own well-formedness contract
// (non-unital unit vector, non-central z, lookup-table values out of range...).
struct ValidationError : Error {
  using Error::Error;
};

// Input outside the mathematical domain of a checker (zero where positivity
// is required, non-integer where integers are required, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input: scalar strings, JSON documents, schema violations.
struct ParseError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach its tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

}  // namespace ybx
