#pragma once

#include <stdexcept>
#include <string>

namespace baton {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (u outside [0,1],
// negative time, beta outside [0,1], unsupported beat count, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Inputs that are individually valid but do not fit together, e.g. a 3-beat
// pattern driven by a 4-beat timing law.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// A pattern document that cannot be turned into a Pattern. `code` is a stable
// machine-readable tag ("syntax", "anchor_count", "alternation", ...).
class DocumentError : public Error {
public:
    DocumentError(std::string code, const std::string& message)
        : Error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace baton
