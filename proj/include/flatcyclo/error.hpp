#pragma once

#include <stdexcept>
#include <string>

namespace flatcyclo {

enum class ErrorKind {
    InvalidArgument,
    NotInvertible,
    DivisionByZero,
    Overflow,
    InexactDivision,
    NotFlat,
    TooLarge,
    FamilyViolation,
    IndexOutOfRange,
    OutOfRange,
    SearchExhausted,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` says what went wrong.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace flatcyclo
