#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biharm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised by exact_div when the divisor does not divide the dividend.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A term-count ceiling was hit; the caller may still hold a partial report.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace biharm
