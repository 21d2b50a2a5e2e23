#pragma once

#include <stdexcept>
#include <string>

namespace realdescent {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing elements of different coefficient fields (e.g. Q(i) with Q(sqrt -2)).
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

// Mixing polynomials over different variable contexts.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Syntax error in a problem file or polynomial expression.  Positions are
// 1-based; column counts bytes from the start of the line.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

// A computation exceeded its configured budget (S-pair count or coefficient
// size).  Partial results are never returned past this point.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// The symmetry data of a problem failed validation.
class SymmetryError : public Error {
public:
    explicit SymmetryError(const std::string& what) : Error(what) {}
};

} // namespace realdescent
