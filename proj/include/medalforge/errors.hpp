#pragma once

#include <stdexcept>

namespace medalforge {

// Unrecoverable input/output problem: missing file, unreadable stream,
// failed write. The CLI maps this to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace medalforge
