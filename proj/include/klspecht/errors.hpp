#pragma once

#include <stdexcept>

namespace klspecht {

/// Raised when a textual literal or a constructor argument does not describe
/// a valid combinatorial object.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace klspecht
