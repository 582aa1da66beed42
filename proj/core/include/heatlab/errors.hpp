#pragma once

#include <stdexcept>
#include <string>

namespace heatlab {

// Base class for everything this library throws. The CLI maps subclasses
// onto process exit codes; library users can catch the base class.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The caller asked for something outside the supported domain: bad
// geometry, out-of-range parameters, malformed configuration.
class InvalidQuery : public Error {
public:
  using Error::Error;
};

// A truncation budget (series terms, quadrature panels, solver steps) ran
// out before the requested tolerance was met.
class BudgetExhausted : public Error {
public:
  using Error::Error;
};

// A closed-form estimate was requested outside the parameter region where
// it is asserted. Distinct from a numeric error: the value is simply not
// defined there.
class OutOfValidity : public Error {
public:
  using Error::Error;
};

// Floating-point breakdown: NaN contamination, a solver that stopped
// converging, or a step size that underflowed without a diagnosis.
class NumericFailure : public Error {
public:
  using Error::Error;
};

}  // namespace heatlab
