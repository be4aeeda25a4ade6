#pragma once

#include <stdexcept>
#include <string>

namespace stiran {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct InvalidChannel : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Orbit plane has sin(theta) == 0, so its arc cannot reach the visible cap.
struct DegenerateOrbit : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct InvalidDistance : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Distance outside the support of a distribution.
struct OutOfSupport : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Quadrature or root-finding did not reach its tolerance.
struct NumericalError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace stiran
