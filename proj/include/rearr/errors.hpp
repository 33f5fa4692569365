#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rearr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    enum class Kind { Empty, Malformed, DuplicateElement, OutOfRange, NonBinary };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class InvalidLength : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    LengthMismatch(int a, int b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NoMoveSet : public Error {
public:
    NoMoveSet() : Error("breakpoint metric has no move set") {}
};

class InvalidSequence : public Error {
public:
    using Error::Error;
};

class InvalidBudget : public Error {
public:
    explicit InvalidBudget(int d) : Error("invalid budget d=" + std::to_string(d)) {}
};

class UnsupportedMetric : public Error {
public:
    using Error::Error;
};

// Thrown by the exact searches when the instance is larger than the configured
// cap or the node budget runs out.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace rearr
