#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ptree {

// Base class for every error raised by the engine. The CLI maps any
// Error to a one-line diagnostic and exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A variable or value name (or id) that is not part of the registry.
struct UnknownSymbolError : Error {
  using Error::Error;
};

// A path query that does not trace a root-to-leaf route.
struct PathNotFoundError : Error {
  using Error::Error;
};

// Conditioning or observing an event of probability zero, or a posterior
// update in which every hypothesis assigns zero mass to the evidence.
struct ZeroProbabilityError : Error {
  using Error::Error;
};

// Events or intervention lists that mention the same variable twice, or
// grafted subtrees that reuse variables already resolved on a path.
struct OverlapError : Error {
  using Error::Error;
};

// Structural preconditions: intervening on a variable absent from the
// tree, a graft selector unresolved on a path, a hypothesis variable
// that does not causally precede the evidence.
struct StructureError : Error {
  using Error::Error;
};

// The replicated-tree oracle would exceed its enumeration budget.
struct SizeGuardError : Error {
  using Error::Error;
};

// DSL syntax error; line/column are 1-based positions in the input.
struct ParseError : Error {
  ParseError(int line_, int column_, const std::string& message)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

// A structurally well-formed document that violates tree invariants
// (non-normalized node, duplicate variable on a path, ...). `problems`
// holds one rendered message per violation.
struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> problems_)
      : Error(problems_.empty() ? std::string("invalid tree")
                                : problems_.front() +
                                      (problems_.size() > 1
                                           ? " (+" + std::to_string(problems_.size() - 1) +
                                                 " more)"
                                           : std::string{})),
        problems(std::move(problems_)) {}
  std::vector<std::string> problems;
};

}  // namespace ptree
