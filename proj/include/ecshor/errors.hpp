#pragma once

#include <stdexcept>
#include <string>

namespace ecshor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ecgroup
struct NoSuchSubgroup : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct NotInSubgroup : Error { using Error::Error; };

// simulator
struct WidthMismatch : Error { using Error::Error; };
struct NoConsistentConvention : Error { using Error::Error; };

// postprocess
struct NotInvertible : Error { using Error::Error; };
struct MalformedBitstring : Error { using Error::Error; };

// calibration CSV
struct MissingColumn : Error { using Error::Error; };
struct MalformedRow : Error { using Error::Error; };
struct NotEnoughQubits : Error { using Error::Error; };

// results schema
struct SchemaError : Error { using Error::Error; };

}  // namespace ecshor
