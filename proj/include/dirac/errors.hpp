#pragma once

#include <stdexcept>
#include <string>

namespace dirac {

/// Bad index, non-unit direction, off-shell momentum, malformed spin vector.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructor was asked for a kinematic point outside the energy region
/// it is defined on (real boost region |p0| >= m or breve region |p0| <= m).
class RegionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A verification check could not be evaluated as configured.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dirac
