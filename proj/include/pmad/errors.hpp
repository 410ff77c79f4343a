#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmad {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An integral or series that does not converge for the requested arguments.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity underflowed or overflowed so the requested ratio is meaningless.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Posterior mass not contained by the quadrature box even after expansion.
class BoxEscapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file that cannot be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pmad
