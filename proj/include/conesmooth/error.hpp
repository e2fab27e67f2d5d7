#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace conesmooth {

/// Bad input: wrong sizes, non-finite values, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An iterative method failed to reach its tolerance, or a numerical check
/// the caller relies on did not hold.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested operation has no implementation for this family or cone.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void require_dim(std::size_t got, std::size_t expected, const char* what);
void require_finite(std::span<const double> x, const char* what);

}  // namespace conesmooth
