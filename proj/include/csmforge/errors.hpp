#pragma once

#include <stdexcept>
#include <string>

namespace csmforge {

// Failure taxonomy shared by the library and the CLI exit codes:
//   input      -> exit 2 (bad files, bad expressions, ring mismatches, bad arguments)
//   resource   -> exit 3 (step budgets exhausted)
//   randomness -> exit 3 (seed disagreement, holdout mismatch, retries exhausted)
//   anomaly    -> exit 3 (internal consistency gates tripped, e.g. non-integral output)
// Verification MISMATCH is not an exception; verify_* return comparison results
// and the CLI maps a failed comparison to exit 1.
class Error : public std::runtime_error {
public:
    enum class Kind { input, resource, randomness, anomaly, internal };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(Kind::input, what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(Kind::resource, what) {}
};

class RandomnessError : public Error {
public:
    explicit RandomnessError(const std::string& what) : Error(Kind::randomness, what) {}
};

class AnomalyError : public Error {
public:
    explicit AnomalyError(const std::string& what) : Error(Kind::anomaly, what) {}
};

// Thrown by quotient_vs_dimension when the staircase is infinite.  The projective-degree
// driver catches it and retries with fresh randomness; everywhere else it propagates.
class NotZeroDimensionalError : public Error {
public:
    explicit NotZeroDimensionalError(const std::string& what) : Error(Kind::randomness, what) {}
};

// Thrown when a fitted Segre family fails to reproduce a held-out sample even after a
// retry with fresh randomness: either persistent bad luck or a genuinely non-polynomial
// family.  The message carries every sample so the instance can be studied offline.
class HoldoutMismatchError : public Error {
public:
    explicit HoldoutMismatchError(const std::string& what) : Error(Kind::randomness, what) {}
};

inline int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case Error::Kind::input: return 2;
        case Error::Kind::resource:
        case Error::Kind::randomness:
        case Error::Kind::anomaly:
        case Error::Kind::internal: return 3;
    }
    return 3;
}

} // namespace csmforge
