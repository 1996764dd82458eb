#pragma once

#include <stdexcept>

namespace chordal {

// Error taxonomy shared by every module.  Parse/range errors come out of the
// readers, domain errors signal violated preconditions (non-chordal input,
// theorem hypothesis not met), resource errors mean an enumeration bound was
// exceeded, and inconsistency errors mean a structure broke its own
// invariant (e.g. a clique tree that does not cover an edge).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InvalidEdgeError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ResourceError : Error {
  using Error::Error;
};
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace chordal
