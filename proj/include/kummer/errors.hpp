#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kummer {

/// Input lies outside what the exact pipeline can decide over Q.
class UnsupportedInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A denominator keeps an irreducible factor of degree >= 2 after all
/// rational roots have been removed.
class UnsupportedPoles : public UnsupportedInput {
public:
    UnsupportedPoles(const std::string& factor)
        : UnsupportedInput("unsupported poles: irreducible factor " + factor + " has no rational roots"),
          factor_(factor) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

/// Evaluation at a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("parse error at " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A witness failed to re-verify by exact substitution. Always a bug.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kummer
