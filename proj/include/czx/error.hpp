// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_ERROR_HPP_
#define CZX_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace czx {

  //! Thrown when an index computation leaves the range of std::int64_t.
  class OverflowError : public std::overflow_error {
   public:
    using std::overflow_error::overflow_error;
  };

  //! Thrown when an argument violates an operation's precondition.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  //! Thrown when law parameters violate the law's side conditions.
  class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown by the text parsers.
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace checked {

    inline std::int64_t add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in addition");
      }
      return r;
    }

    inline std::int64_t sub(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_sub_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in subtraction");
      }
      return r;
    }

    inline std::int64_t mul(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in multiplication");
      }
      return r;
    }

    inline std::int64_t neg(std::int64_t x) {
      return sub(0, x);
    }

    inline std::int64_t abs(std::int64_t x) {
      return x < 0 ? neg(x) : x;
    }

  }  // namespace checked
}  // namespace czx

#endif  // CZX_ERROR_HPP_
