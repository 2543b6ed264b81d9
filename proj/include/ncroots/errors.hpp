#pragma once

#include <stdexcept>

namespace ncroots {

/// Operands live in different rings (different field, size or algebra).
struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An inverse was required but the element is not a unit.
struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_polynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The two prescribed roots coincide.
struct equal_roots : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Ring is infinite, or an exhaustive search would exceed its cap.
struct enumeration_limit : std::length_error {
    using std::length_error::length_error;
};

/// Two routes that must agree did not; indicates a broken precondition.
struct inconsistent_result : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ncroots
