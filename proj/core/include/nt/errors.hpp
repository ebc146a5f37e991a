#pragma once

#include <stdexcept>
#include <string>

namespace nt {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidField : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InvalidDivisor : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct SquareDiscriminant : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

// budget exceeded (enumeration size, factoring effort, precision window)
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// primes above 2 that are not split
struct UnsupportedPrime : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedRegime : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nt
