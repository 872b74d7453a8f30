#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayley {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range indices, non-bijective permutations,
// bad table files, invalid descriptor parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A construction would exceed the configured order cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// quotient() was handed a subgroup that is not normal.
class NormalityError : public Error {
 public:
  NormalityError(std::size_t g, std::size_t n, const std::string& what)
      : Error(what), g_(g), n_(n) {}

  std::size_t g() const noexcept { return g_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t g_;
  std::size_t n_;
};

// A caller-supplied hypothesis does not hold (e.g. a non-generating set).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Something that is a theorem failed to hold. Always an implementation bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A search would exceed its cap; distinct from a negative answer.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

// Descriptor syntax error carrying the byte offset of the failure.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : InputError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cayley
