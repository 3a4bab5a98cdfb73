// Exception types shared by every module.

#ifndef BBGROUPS_ERROR_HPP_
#define BBGROUPS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbgroups {

  //! Base class of all exceptions thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A mathematical precondition failed (disconnected complex, unknown
  //! vertex, nonzero exponent sum, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text or JSON input. Line and column are 1-based; 0 means
  //! the position is not known (e.g. JSON structural errors).
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(format(msg, line, column)), _line(line), _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    static std::string format(std::string const& msg,
                              std::size_t        line,
                              std::size_t        column) {
      if (line == 0) {
        return msg;
      }
      return std::to_string(line) + ":" + std::to_string(column) + ": "
             + msg;
    }

    std::size_t _line;
    std::size_t _column;
  };

}  // namespace bbgroups

#endif  // BBGROUPS_ERROR_HPP_
