#pragma once

#include <stdexcept>
#include <string>

namespace rmac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (cells, permutations, word length) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed; indicates a bug or corrupt input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace rmac
