#pragma once

#include <stdexcept>
#include <string>

namespace xai {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };        // shape mismatch; message names the layer
struct NumericError : Error { using Error::Error; };          // non-finite values where finite required
struct StateError : Error { using Error::Error; };            // e.g. backward before forward
struct IndexError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };           // bad magic/version/truncated payload
struct IoError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };           // exact/oracle size limits exceeded
struct CapabilityError : Error { using Error::Error; };       // gradient method on an opaque model
struct IllConditionedError : Error { using Error::Error; };
struct TrainingDivergedError : Error { using Error::Error; };
struct InternalConsistencyError : Error { using Error::Error; };

} // namespace xai
