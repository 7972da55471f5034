#pragma once

#include <stdexcept>
#include <string>

namespace mutvis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed construction input: bad vertex index, self-loop, bad family params.
struct InvalidInputError : Error {
    using Error::Error;
};

// Raised by distance computation and solver entry points on disconnected graphs.
struct DisconnectedError : Error {
    using Error::Error;
};

// Instance exceeds a configured or hard size cap.
struct CapExceededError : Error {
    using Error::Error;
};

// Malformed graph file or graph spec string.
struct ParseError : Error {
    using Error::Error;
};

} // namespace mutvis
