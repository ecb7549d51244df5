#ifndef UMC_ERRORS_HPP
#define UMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace umc {

// Error categories map 1:1 onto CLI exit codes:
//   ParseError      -> 1  (unreadable or malformed input files)
//   ValidationError -> 2  (bad arguments, contract violations)
//   CorruptError    -> 3  (damaged binary artifacts: streams, permutation files)
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what) {}
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class CorruptError : public Error {
public:
  using Error::Error;
};

}  // namespace umc

#endif
