#pragma once

#include <stdexcept>
#include <string>

namespace mlq {

// Error taxonomy shared by all modules. Every failure mode that callers are
// expected to handle gets its own type; anything else is a plain logic_error.

struct MismatchedArity : std::invalid_argument {
    explicit MismatchedArity(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtEvaluationPoint : std::domain_error {
    explicit PoleAtEvaluationPoint(const std::string& what) : std::domain_error(what) {}
};

struct InvalidMatching : std::domain_error {
    explicit InvalidMatching(const std::string& what) : std::domain_error(what) {}
};

struct CharacterizationFailed : std::logic_error {
    explicit CharacterizationFailed(const std::string& what) : std::logic_error(what) {}
};

struct NotIrreducible : std::domain_error {
    explicit NotIrreducible(const std::string& what) : std::domain_error(what) {}
};

struct TruncationUnstable : std::domain_error {
    explicit TruncationUnstable(const std::string& what) : std::domain_error(what) {}
};

}  // namespace mlq
