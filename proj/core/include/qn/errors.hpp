#pragma once

#include <stdexcept>
#include <string>

namespace qn {

/// Argument outside the physical domain of an operation (non-positive mass,
/// transmissivity outside (0,1), zero frequency, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The local oscillator has zero DC amplitude, so the homodyne readout has no gain.
class DegenerateLoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The differential-arm response vanishes and a displacement-referred
/// spectrum cannot be formed (e.g. homodyne angle 0).
class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No sign change of the root function inside the requested band.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qn
