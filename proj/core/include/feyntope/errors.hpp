#pragma once

#include <stdexcept>
#include <string>

namespace feyntope {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or out-of-contract input (bad JSON, momentum non-conservation,
// disconnected graph, enumeration cap, degenerate point configuration).
// CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// A contiguity step hit a pairing that vanishes identically in epsilon,
// so no admissible facet normal makes progress.  CLI exit code 3.
struct ResonantError : Error {
  using Error::Error;
};

// A quadrature did not reach the requested tolerance.  CLI exit code 4.
struct ToleranceError : Error {
  using Error::Error;
};

}  // namespace feyntope
