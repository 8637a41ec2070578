#pragma once

#include <stdexcept>
#include <string>

namespace zonal {

/// Argument outside the mathematical domain of an operation (|x| > 1, x < 0, p <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A degree, index or table size exceeds its configured cap.
class CapError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Index outside the admissible range for a given degree.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// An iterative procedure (quadrature refinement, series tail) did not meet its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical guarantee the code relies on did not hold. Indicates a defect.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Invalid user-supplied configuration.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace zonal
