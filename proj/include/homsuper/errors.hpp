#pragma once

#include <stdexcept>
#include <string>

namespace homsuper {

/// Malformed data: index out of range, dimension mismatch, mixed parameters,
/// parity violations discovered while building structures.
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero and friends.
class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Substituting a value that hits a pole or an undefined power.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the domain a check is defined on (e.g. a graded algebra fed
/// to an ungraded-only check, or a non-homogeneous element).
class unsupported_input_error : public std::runtime_error {
public:
    explicit unsupported_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax or semantic error in an algebra definition file.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace homsuper
