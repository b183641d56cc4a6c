#pragma once

#include <stdexcept>

namespace smoothwords {

/// Raised when an enumeration would exceed its configured state cap.
class ResourceLimitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace smoothwords
