#ifndef TVCC_ERROR_HPP
#define TVCC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvcc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

/// Widths, lengths or matrix shapes that do not fit together.
class ShapeMismatch : public Error {
   public:
    using Error::Error;
};

/// Every minor of the requested order vanishes, so the matrix is not an encoder of the stated rate.
class RankDeficient : public Error {
   public:
    using Error::Error;
};

class NotCatastrophic : public Error {
   public:
    using Error::Error;
};

/// Input exceeds a hard size guard (determinant side, state bits).
class TooLarge : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace tvcc

#endif
