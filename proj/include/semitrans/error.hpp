#ifndef SEMITRANS_ERROR_HPP_
#define SEMITRANS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semitrans {

  // Base class of everything thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed chain-cycle text or semigroup file.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A semitransitivity-dependent query on a set that is not semitransitive.
  class NotSemitransitive : public Error {
   public:
    using Error::Error;
  };

}  // namespace semitrans

#endif  // SEMITRANS_ERROR_HPP_
