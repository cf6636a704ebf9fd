#pragma once

#include <stdexcept>
#include <string>

namespace ramsat {

/// Precondition or parameter-regime violation by the caller.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (graph6, DIMACS, config files, solver output).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented size or budget ceiling was hit; the computation refused rather than guessing.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsat
