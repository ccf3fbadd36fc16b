#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace volterra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct ComplementError : Error {
  using Error::Error;
};

struct SimplexError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct CapacityError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Raised when a tournament is requested for a skew matrix with off-diagonal
/// zeros; carries the (1-based) index pairs where the orientation is undefined.
struct ZeroEntryError : Error {
  std::vector<std::pair<int, int>> pairs;

  ZeroEntryError(const std::string& msg, std::vector<std::pair<int, int>> offending)
      : Error(msg), pairs(std::move(offending)) {}
};

}  // namespace volterra
