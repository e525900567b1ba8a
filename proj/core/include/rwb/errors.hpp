#ifndef RWB_ERRORS_HPP
#define RWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rwb {

struct RwbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in DSL input.  Carries a 1-based position.
struct SyntaxError : RwbError {
  SyntaxError(const std::string& msg, int line, int col)
      : RwbError(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Undeclared sort, arity mismatch, or a sort-incorrect term/atom.
struct SortError : RwbError {
  using RwbError::RwbError;
};

// A connective outside the {true, &, exists, =} fragment.
struct RegularityError : RwbError {
  using RwbError::RwbError;
};

struct ArityError : RwbError {
  using RwbError::RwbError;
};

struct PreconditionError : RwbError {
  using RwbError::RwbError;
};

// Index shape is not a directed poset, or the arrows are not functorial.
struct DiagramError : RwbError {
  using RwbError::RwbError;
};

struct NotInjectiveError : RwbError {
  using RwbError::RwbError;
};

struct NotFunctionalError : RwbError {
  using RwbError::RwbError;
};

}  // namespace rwb

#endif  // RWB_ERRORS_HPP
