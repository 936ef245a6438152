#pragma once

#include <stdexcept>
#include <string>

namespace ptoeplitz {

/// Failure categories; the CLI maps these onto exit codes.
enum class ErrorKind {
    kInvalidArgument,   // precondition or invariant violation
    kParse,             // malformed input document
    kNonConvergence,    // iterative solver hit its cap
    kIllConditioned,    // interpolation / linear solve rejected
    kIo,
    kToleranceBreach,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace ptoeplitz
