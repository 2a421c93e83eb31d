#pragma once

#include <stdexcept>
#include <string>

namespace gridtds {

class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVertex : public GridError {
public:
    using GridError::GridError;
};

class InvalidColumn : public GridError {
public:
    using GridError::GridError;
};

class EdgeNotPresent : public GridError {
public:
    using GridError::GridError;
};

class InvalidSymmetry : public GridError {
public:
    using GridError::GridError;
};

class InvalidInput : public GridError {
public:
    using GridError::GridError;
};

/// Raised when an instance exceeds a solver's configured size cap.
class TooLarge : public GridError {
public:
    using GridError::GridError;
};

/// Malformed textual vertex or edge name.
class ParseError : public GridError {
public:
    using GridError::GridError;
};

} // namespace gridtds
