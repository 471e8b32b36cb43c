#pragma once

#include <stdexcept>
#include <string>

namespace tcb {

/// Error with a stable machine-readable kind tag. Kinds used across the
/// library: InvalidFraction, InvalidChain, ParseError, UnknownVertex,
/// UnknownEdge, NotBlack, NotContractible, NotATree, NotParabolic,
/// NonPositiveKernel, SingularSystem, NotApplicable, PreconditionViolated,
/// PostVerificationFailed, NotATChain, NotFound, BoundsTooLarge,
/// ClassificationGap, DivisionByZero, Internal.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw error(kind, msg);
}

inline void check(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

// Internal consistency failures: conditions that are theorems of the
// implemented calculus. Tripping one means the implementation is wrong.
inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) fail("Internal", "internal inconsistency: " + msg);
}

}  // namespace tcb
