#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

/// Malformed input: bad syntax, shape mismatch, ring mismatch, schema violation.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element or matrix that has no inverse over its scalar ring.
class not_invertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A construction was refused because a mathematical precondition does not hold.
class precondition_failed : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace malcev
