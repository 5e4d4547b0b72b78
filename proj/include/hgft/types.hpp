#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "hgft/errors.hpp"

namespace hgft {

using cplx = std::complex<double>;

namespace num {
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double log_2pi = 1.83787706640934548356065947281123527;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
}  // namespace num

// True when z sits within tol of {0, -1, -2, ...}.
inline bool near_nonpositive_integer(cplx z, double tol = 1e-12) {
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

// Distance of a complex number to the set of (real) integers.
inline double dist_to_integers(cplx z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

// Principal wrap of an angle difference into (-pi, pi].
inline double wrap_angle(double x) {
  x = std::remainder(x, 2.0 * num::pi);
  if (x <= -num::pi) x += 2.0 * num::pi;
  return x;
}

// Parameters (a, b, c) of 2F1.  c must stay away from {0, -1, -2, ...};
// ab == 0 collapses the shifted function to f(z) = z.
struct ParamTriple {
  cplx a;
  cplx b;
  cplx c;

  bool ab_zero() const { return a == cplx(0.0) || b == cplx(0.0); }

  void validate() const {
    if (near_nonpositive_integer(c)) {
      throw invalid_c_error("c must not be a non-positive integer");
    }
  }
};

// lambda in (-pi/2, pi/2), strict.
struct SpiralAngle {
  explicit SpiralAngle(double radians) : lambda_(radians) {
    if (!(radians > -num::pi / 2 && radians < num::pi / 2)) {
      throw std::invalid_argument("spiral angle must lie in (-pi/2, pi/2)");
    }
  }
  double value() const { return lambda_; }

private:
  double lambda_;
};

}  // namespace hgft
