#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phylo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by operations defined only for acyclic digraphs; carries a
/// directed-cycle witness v0 -> v1 -> ... -> v0 (last equals first).
struct CyclicInput : Error {
  std::vector<int> cycle;
  explicit CyclicInput(std::vector<int> c)
      : Error("input digraph is cyclic"), cycle(std::move(c)) {}
};

struct OutOfRange : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct NotAHole : Error {
  using Error::Error;
};

struct HoleTooShort : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  std::string clause;
  explicit PreconditionViolated(std::string c)
      : Error("precondition violated: " + c), clause(std::move(c)) {}
};

/// A statement imported from the literature failed on inputs satisfying its
/// hypotheses. Should never fire; if it does, that is a reportable finding.
struct LemmaCounterexample : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

struct UnknownStatement : Error {
  using Error::Error;
};

struct BoundsOutOfScope : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line, column;
  ParseError(int ln, int col, const std::string& msg)
      : Error("line " + std::to_string(ln) + ", col " + std::to_string(col) +
              ": " + msg),
        line(ln), column(col) {}
};

}  // namespace phylo
