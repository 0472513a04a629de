#pragma once

#include <stdexcept>
#include <string>

namespace cospan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two subsets or structures built over different ground sets were combined.
class GroundMismatchError : public Error {
 public:
  using Error::Error;
};

// A dense 2^n structure was requested beyond the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON / input records.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The input does not satisfy an operation's precondition (not a greedoid,
// partition not interval, class without unique maximum, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace cospan
