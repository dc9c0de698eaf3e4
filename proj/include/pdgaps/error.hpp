#pragma once

#include <stdexcept>
#include <string>

namespace pdgaps {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: letters outside {a,b}, bad ids, out-of-order occurrences.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotAFactor : public Error {
public:
    explicit NotAFactor(const std::string& word)
        : Error("not a factor of the period-doubling sequence: " + word) {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Raised when a structural theorem the library relies on is observed to fail.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace pdgaps
