#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobz {

// Base class for every error this library throws on invalid input.
// Internal invariant violations use assertions instead, never Error.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Composition was attempted between morphisms whose boundary words disagree.
struct BoundaryMismatch : Error {
  using Error::Error;
};

// An operation requiring source == target was given a non-endomorphism.
struct NotEndomorphism : Error {
  using Error::Error;
};

// A scalar was requested from a morphism that still has boundary arcs.
struct NotClosed : Error {
  using Error::Error;
};

// An inverse was requested from a morphism that has none.
struct NotInvertible : Error {
  using Error::Error;
};

// A square matrix was required (duality data, powers, inverses).
struct NotSquare : Error {
  using Error::Error;
};

// Lexical/grammatical error in a term, theta spec, or matrix file.
// `position` is the 1-based character offset of the offending input;
// `expected` lists what would have been accepted there.
struct SyntaxError : Error {
  std::size_t position;
  std::vector<std::string> expected;

  SyntaxError(std::size_t pos, std::vector<std::string> exp, const std::string& what)
      : Error(what), position(pos), expected(std::move(exp)) {}
};

// A term is grammatical but its boundary words do not line up.
struct TypeError : Error {
  using Error::Error;
};

}  // namespace cobz
