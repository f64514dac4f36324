#pragma once

#include <stdexcept>
#include <string>

namespace biquot {

/// Input violates a documented invariant (bad family/rank, rank imbalance, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed catalog, table or graded-group text. `location()` names the
/// offending line or record, e.g. "line 3" or "singly_generated[2]".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& location, const std::string& what)
        : std::runtime_error(location + ": " + what), location_(location)
    {
    }

    ParseError(std::size_t line, const std::string& what)
        : ParseError("line " + std::to_string(line), what)
    {
    }

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// Parameter outside the range where a closed form is valid.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gysin checker input outside the supported group shape.
class UnsupportedShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Free ranks of a graded group are not Poincare symmetric.
class NotAManifoldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sampled character is not an integer combination of weight characters.
class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace biquot
