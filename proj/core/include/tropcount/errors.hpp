#pragma once

#include <stdexcept>
#include <string>

namespace tropcount {

// Instance fails the general-position equation or a cross-ratio rule.
class WellPosednessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed vertex profile, map or split input.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Recursion node cap exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tropcount
