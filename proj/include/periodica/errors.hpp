#pragma once

#include <stdexcept>
#include <string>

namespace periodica {

// Input violates a documented precondition or invariant. Exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A criterion whose hypotheses do not match the input.
class NotApplicableError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class FixtureRequiredError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Consistency check failed; indicates a bug. Exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw ValidationError(msg);
}

inline void ensure(bool cond, const std::string& msg)
{
    if (!cond)
        throw InternalError(msg);
}

} // namespace periodica
