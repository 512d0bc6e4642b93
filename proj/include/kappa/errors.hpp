#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// An element mentions a generator the chosen relation table has no rules for.
class UnknownGeneratorError : public Error {
public:
    using Error::Error;
};

// An element was passed to a coalgebra/pairing operation on the wrong side.
class WrongSideError : public Error {
public:
    using Error::Error;
};

class NonCrossPairError : public Error {
public:
    using Error::Error;
};

class MissingFixtureError : public Error {
public:
    using Error::Error;
};

class StateError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}

    std::size_t pos;
};

} // namespace kappa
