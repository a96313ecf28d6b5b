#ifndef SCG_ERRORS_HPP
#define SCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scg {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   ParseError          -> exit 2   (malformed files, bad config syntax)
//   PreconditionError   -> exit 3   (bad parameters or unusable input)
//   DegenerateInputError-> exit 4   (input valid in form but degenerate,
//                                    e.g. all-equal samples under min-max)

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values (cutoff out of range, empty scale list, ...).
class ParameterError : public PreconditionError {
 public:
  explicit ParameterError(const std::string& what) : PreconditionError(what) {}
};

// Structurally bad input data (too short, mismatched lengths, ...).
class InputError : public PreconditionError {
 public:
  explicit InputError(const std::string& what) : PreconditionError(what) {}
};

class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scg

#endif
