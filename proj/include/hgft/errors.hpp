#pragma once

#include <stdexcept>
#include <string>

namespace hgft {

// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma/digamma evaluated at a non-positive integer.
class pole_error : public error {
public:
  using error::error;
};

// Parameter c of 2F1 is (numerically) a non-positive integer.
class invalid_c_error : public error {
public:
  using error::error;
};

// z lies inside the exclusion radius around z = 1 and no branch applies.
class too_close_to_one_error : public error {
public:
  using error::error;
};

// Zero-balanced evaluation (a + b = c) requested at z = 1.
class zero_balanced_boundary_error : public error {
public:
  using error::error;
};

// |F(z)| fell below the pole threshold in a quotient.
class quotient_pole_error : public error {
public:
  using error::error;
};

// arg h(z) requested where |h| is numerically zero.
class arg_undefined_error : public error {
public:
  using error::error;
};

// The spirallikeness criterion needs lambda != 0.
class lambda_zero_error : public error {
public:
  using error::error;
};

// c - a - b is not purely imaginary nonzero.
class not_zero_imbalanced_error : public error {
public:
  using error::error;
};

}  // namespace hgft
