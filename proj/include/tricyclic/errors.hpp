#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricyclic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list text could not be turned into a digraph. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Argument-level failures. Each carries only a message; the class names the contract
// that was broken so callers can dispatch on it.
#define TRICYCLIC_DEFINE_ERROR(Name)      \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    }

TRICYCLIC_DEFINE_ERROR(InvalidDigraph);
TRICYCLIC_DEFINE_ERROR(CycleBudgetExceeded);
TRICYCLIC_DEFINE_ERROR(NotStronglyConnected);
TRICYCLIC_DEFINE_ERROR(NotUnbreakable);
TRICYCLIC_DEFINE_ERROR(TooSmall);
TRICYCLIC_DEFINE_ERROR(HostEqualsG);
TRICYCLIC_DEFINE_ERROR(NoEar);
TRICYCLIC_DEFINE_ERROR(NoPath);
TRICYCLIC_DEFINE_ERROR(ArcNotPresent);
TRICYCLIC_DEFINE_ERROR(SplitInvalid);
TRICYCLIC_DEFINE_ERROR(HypothesisViolated);
TRICYCLIC_DEFINE_ERROR(InvalidScript);
TRICYCLIC_DEFINE_ERROR(NotAnnular);
TRICYCLIC_DEFINE_ERROR(NotAWeighting);
TRICYCLIC_DEFINE_ERROR(PatternMismatch);
TRICYCLIC_DEFINE_ERROR(IoError);
TRICYCLIC_DEFINE_ERROR(SchemaError);

#undef TRICYCLIC_DEFINE_ERROR

/// A special edge sum was requested on an arc that is not special. `side()` is 1 or 2.
class NotSpecial : public Error {
public:
    NotSpecial(int side, const std::string& what) : Error(what), side_(side) {}
    int side() const noexcept { return side_; }

private:
    int side_;
};

/// A build script step could not be replayed. `index()` is the 0-based step index.
class InvalidStep : public Error {
public:
    InvalidStep(std::size_t index, const std::string& what)
        : Error("step " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace tricyclic
