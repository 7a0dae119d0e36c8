#pragma once

#include <stdexcept>
#include <string>

namespace eigenzeros {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user input: bad config keys, malformed specs, precondition misuse.
// The CLI maps these to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// Numerical breakdown at run time. The CLI maps these to exit code 3.
struct NumericalError : Error {
  using Error::Error;
};

// The pullback-metric eigenvalues vary across sample points beyond tolerance,
// which means the basis is not invariant (or the basis code is wrong).
struct ConstancyViolation : NumericalError {
  using NumericalError::NumericalError;
};

// The closed-form nodal-volume prediction only applies to isotropy-irreducible
// models; asked for it on something else.
struct NotIsotropyIrreducible : ConfigError {
  using ConfigError::ConfigError;
};

// The 2x2 elimination resultant vanishes identically: the sampled system has a
// positive-dimensional zero set.
struct DegenerateFrame : NumericalError {
  using NumericalError::NumericalError;
};

// Nodal-length mesh refinement hit the level limit without stabilizing.
struct NonConvergent : NumericalError {
  using NumericalError::NumericalError;
};

// A mesh vertex (or solved point) sits on the section within round-off; the
// intersection count is undefined and the rotation must be re-drawn.
struct AmbiguousSection : NumericalError {
  using NumericalError::NumericalError;
};

// The evaluation map factors through a smaller torus (frequency components
// share a divisor), so the image mesh would undercount the covering.
struct CoveringDegree : ConfigError {
  using ConfigError::ConfigError;
};

// More than the allowed fraction of Monte Carlo trials failed certification.
struct TooManyUncertified : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace eigenzeros
