#pragma once

#include <stdexcept>
#include <string>

namespace hypwave {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two points lie outside each other's characteristic cone; a hyperbolic
/// distance between them does not exist.
class SpacelikeSeparation : public Error {
public:
    using Error::Error;
};

/// Direction argument is not inside the right sector (x > |y|).
class OutOfSector : public Error {
public:
    using Error::Error;
};

/// A point sits on the light cone of the origin; the inversion in the
/// hyperbola is undefined there.
class DegenerateConfig : public Error {
public:
    using Error::Error;
};

/// The requested geometric configuration does not exist (e.g. Q outside
/// the data hyperbola, so there is no dependence domain).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Inner hyperbola semi-diameter too large: no two-point intersection with
/// the data hyperbola on the right arm.
class RhoTooLarge : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Adaptive quadrature exhausted its refinement budget.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// The extrapolation fit does not describe the sampled sequence.
class ExtrapolationUnstable : public Error {
public:
    using Error::Error;
};

}  // namespace hypwave
