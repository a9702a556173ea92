#pragma once

#include <stdexcept>

namespace qwalk {

/// Base class for every error this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value is outside its documented domain (bad angle, probability
/// outside [0,1], empty window, ...).
class invalid_parameter : public error {
public:
    using error::error;
};

/// The walk would step past the allocated lattice radius.
class capacity_error : public error {
public:
    using error::error;
};

/// Config text could not be parsed or validated.
class parse_error : public error {
public:
    using error::error;
};

/// Reading or writing a file failed.
class io_error : public error {
public:
    using error::error;
};

}  // namespace qwalk
