#pragma once

#include <stdexcept>
#include <string>

namespace nur4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic partners of different lengths.
struct LengthMismatch : Error {
    using Error::Error;
};

// Type parameters (n, k0, k1) outside the enumeration universe.
struct InvalidType : Error {
    using Error::Error;
};

// Operation refused because the word space is too large to scan.
struct LengthTooLarge : Error {
    using Error::Error;
};

// Minimum distance of a code with fewer than two words.
struct TooFewCodewords : Error {
    using Error::Error;
};

// A word set that is not an F2-linear code.
struct NotLinear : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace nur4
