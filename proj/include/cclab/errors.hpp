#ifndef CCLAB_ERRORS_HPP
#define CCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cclab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument fell outside its documented domain.
struct OutOfRange : Error {
    using Error::Error;
};

/// gap ratio requested at M = N, where both rates vanish.
struct DegenerateRatio : Error {
    using Error::Error;
};

/// Centralized placement requested at a non-corner memory point.
struct NonCornerMemory : Error {
    using Error::Error;
};

/// File size not divisible into the required equal-size subfiles.
struct IndivisibleFile : Error {
    using Error::Error;
};

/// A decoder could not reconstruct its requested file (scheme bug).
struct DecodeFailure : Error {
    using Error::Error;
};

/// A certified bound was violated at some grid point.
struct BoundViolation : Error {
    using Error::Error;
};

}  // namespace cclab

#endif
