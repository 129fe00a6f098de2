#pragma once

#include <stdexcept>
#include <string>

namespace ldop {

/// Invalid argument or configuration supplied by the caller.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coordinate or pixel lies outside the region an operation is defined on.
class BoundsError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Image too small for the requested neighborhood.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File was readable but its contents are not a supported format.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ldop
