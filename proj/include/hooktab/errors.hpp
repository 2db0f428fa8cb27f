#ifndef HOOKTAB_ERRORS_HPP
#define HOOKTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hooktab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called on a tableau outside its domain.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// A loop that must terminate ran past its step budget, or a proven
// invariant failed. Never expected to fire.
class InternalError : public Error {
public:
    using Error::Error;
};

class NonpositiveBetaIndex : public Error {
public:
    using Error::Error;
};

class CapMismatch : public Error {
public:
    using Error::Error;
};

class CapTooSmall : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& expected)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

}  // namespace hooktab

#endif  // HOOKTAB_ERRORS_HPP
