#pragma once

#include <stdexcept>
#include <string>

namespace trispline {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
  using Error::Error;
};
struct CoincidentPoints : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct OutsideDomain : Error {
  using Error::Error;
};
struct MissingData : Error {
  using Error::Error;
};
struct BadGrid : Error {
  using Error::Error;
};
struct SingularMap : Error {
  using Error::Error;
};
struct IntegerOverflow : Error {
  using Error::Error;
};
// Exact polynomial division left a remainder where the theory guarantees
// divisibility; indicates an internal bug, not a user error.
struct DivisibilityViolation : Error {
  using Error::Error;
};

}  // namespace trispline
