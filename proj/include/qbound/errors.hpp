#pragma once

#include <stdexcept>
#include <string>

namespace qbound {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

struct InvalidM : Error {
    using Error::Error;
};

struct TooManySettings : Error {
    using Error::Error;
};

struct InvalidRange : Error {
    using Error::Error;
};

struct DegenerateTarget : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

}  // namespace qbound
