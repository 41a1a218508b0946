#ifndef HOPFIND_ERROR_HPP
#define HOPFIND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfind {

// Mathematical or structural failure: bad input data, failed hypotheses,
// exceeded caps. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed documents and unreadable files. The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfind

#endif
