#pragma once

#include <stdexcept>
#include <string>

namespace reco {

// Argument outside the model's domain (type outside [-1/2, 1/2], R outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Conditioning on a recommendation (or count pattern) that has probability zero.
class UnreachableRecommendation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditional expectation over an interval carrying no probability mass.
class EmptyInterval : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecompositionUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A closed form was requested outside the regime where it holds.
class ClosedFormInapplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested operation needs a configuration the model does not cover,
// e.g. an asymmetric sender population where symmetry is required.
class UnsupportedConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed scenario documents. `path` names the offending field.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string path, const std::string& reason)
        : std::runtime_error(path.empty() ? reason : path + ": " + reason), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace reco
