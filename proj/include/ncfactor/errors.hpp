#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncf {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different fields, alphabets or symbol lists.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Exhaustive enumeration over F_p^s would exceed the configured cap.
class SearchSpaceTooLarge : public Error {
public:
    SearchSpaceTooLarge(std::string what, unsigned long long cap)
        : Error(std::move(what)), cap_(cap) {}
    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long cap_;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

class NotGroebnerBasis : public Error {
public:
    using Error::Error;
};

// Brute-force oracle refused to run past its enumeration budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string what, unsigned long long budget)
        : Error(std::move(what)), budget_(budget) {}
    unsigned long long budget() const noexcept { return budget_; }

private:
    unsigned long long budget_;
};

class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position, std::string expected = {})
        : Error(format(message, position, expected)), message_(std::move(message)),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string &message() const noexcept { return message_; }
    // Human-readable set of tokens that would have been accepted, may be empty.
    const std::string &expected() const noexcept { return expected_; }

private:
    static std::string format(const std::string &m, std::size_t pos, const std::string &exp)
    {
        std::string s = "parse error at position " + std::to_string(pos) + ": " + m;
        if (!exp.empty()) {
            s += " (expected " + exp + ")";
        }
        return s;
    }

    std::string message_;
    std::size_t position_;
    std::string expected_;
};

} // namespace ncf
