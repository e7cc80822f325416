#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtlink {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An index or table entry outside its admissible range.
struct RangeError : Error {
  using Error::Error;
};

// A binary table failed one of the quandle axioms.  `axiom` is "Q1", "Q2" or
// "Q3"; `witness` is the first failing instance in row-major scan order.
struct AxiomViolation : Error {
  AxiomViolation(std::string axiom_in, std::vector<int> witness_in,
                 const std::string& msg)
      : Error(msg), axiom(std::move(axiom_in)), witness(std::move(witness_in)) {}
  std::string axiom;
  std::vector<int> witness;
};

// A multiplication table failed a group axiom (conjugation construction).
struct GroupAxiomViolation : Error {
  using Error::Error;
};

// A quasi-trivial-only operation was requested for a non-quasi-trivial pair.
struct ModeError : Error {
  using Error::Error;
};

// A cochain handed to a cocycle-requiring operation fails the cocycle checks.
struct NotACocycle : Error {
  using Error::Error;
};

// Malformed input text.
struct ParseError : Error {
  using Error::Error;
};

// Structurally invalid diagram data.
struct ValidationError : Error {
  using Error::Error;
};

// Over-strand orientation cannot be resolved consistently.
struct OrientationError : ValidationError {
  using ValidationError::ValidationError;
};

// An index (crossing, component, catalog position) out of range.
struct IndexError : Error {
  using Error::Error;
};

// An arc coloring that does not satisfy the crossing relations where one is
// required.
struct InvalidColoring : Error {
  using Error::Error;
};

// Two reports or matrices with incompatible shapes or moduli.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Unknown catalog name.
struct NotFound : Error {
  using Error::Error;
};

}  // namespace qtlink
