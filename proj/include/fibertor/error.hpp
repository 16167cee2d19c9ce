#pragma once

#include <stdexcept>
#include <string>

namespace fibertor {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or out-of-contract input (bad words, non-canonical tables,
  // non-unimodular matrices where unimodular ones are required, ...).
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // A configured cap (index, table count, word length, iterations) was hit.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  // An internal consistency check failed; indicates a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace fibertor
