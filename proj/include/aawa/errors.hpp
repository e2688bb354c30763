#pragma once

#include <stdexcept>
#include <string>

namespace aawa {

/// Thrown when an input value violates a documented precondition.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by file readers; the message names the offending line/column.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace aawa
