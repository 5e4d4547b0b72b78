#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>

#include "hgft/errors.hpp"
#include "hgft/types.hpp"

namespace hgft {

// sin(pi z) and cos(pi z) with the real part reduced modulo integers before
// any trig call.  The naive std::sin(pi * z) loses all accuracy near the
// zeros, which matters when gamma is needed close to its poles (the
// perturbed connection formula evaluates Gamma at distance ~1e-8 from one).
inline cplx sin_pi(cplx z) {
  double n = std::round(z.real());
  double r = z.real() - n;
  double s = std::sin(num::pi * r);
  double c = std::cos(num::pi * r);
  double ch = std::cosh(num::pi * z.imag());
  double sh = std::sinh(num::pi * z.imag());
  cplx v{s * ch, c * sh};
  return std::fmod(n, 2.0) != 0.0 ? -v : v;
}

inline cplx cos_pi(cplx z) {
  double n = std::round(z.real());
  double r = z.real() - n;
  double s = std::sin(num::pi * r);
  double c = std::cos(num::pi * r);
  double ch = std::cosh(num::pi * z.imag());
  double sh = std::sinh(num::pi * z.imag());
  cplx v{c * ch, -s * sh};
  return std::fmod(n, 2.0) != 0.0 ? -v : v;
}

namespace detail {

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
inline constexpr double lanczos_g = 4.7421875;
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,    57.156235665862923517,
    -59.597960355475491248,    14.136097974741747174,
    -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4,
    0.15808870322491248884e-3, -0.21026444172410488319e-3,
    0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline cplx log_gamma_right(cplx z) {
  cplx w = z - 1.0;
  cplx acc = lanczos_c[0];
  for (int k = 1; k < 15; ++k) acc += lanczos_c[k] / (w + double(k));
  cplx t = w + lanczos_g + 0.5;
  return 0.5 * num::log_2pi + (w + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

// Principal-branch log Gamma.  The imaginary part is continuous on the right
// half-plane; on the left half-plane the reflection formula is used, which
// keeps exp(log_gamma) exact but may offset the imaginary part by 2 pi k.
inline cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    throw pole_error("log_gamma: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    return std::log(cplx(num::pi)) - std::log(sin_pi(z)) - detail::log_gamma_right(1.0 - z);
  }
  return detail::log_gamma_right(z);
}

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

// exp(sum log Gamma(num) - sum log Gamma(den)).  A pole among the denominator
// arguments sends the quotient to zero; a pole in the numerator is a genuine
// divergence and throws.
inline cplx gamma_quotient(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  for (cplx w : den) {
    if (near_nonpositive_integer(w)) return cplx(0.0);
  }
  cplx acc = 0.0;
  for (cplx w : num) acc += log_gamma(w);
  for (cplx w : den) acc -= log_gamma(w);
  return std::exp(acc);
}

// psi(z) = Gamma'(z) / Gamma(z): reflection into the right half-plane,
// recurrence until |z| is large, then the Bernoulli asymptotic series.
inline cplx digamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    throw pole_error("digamma: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - num::pi * cos_pi(z) / sin_pi(z);
  }
  cplx acc = 0.0;
  cplx w = z;
  while (std::abs(w) < 12.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  static constexpr double bern[7] = {1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                     5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};
  cplx iw2 = 1.0 / (w * w);
  cplx pw = iw2;
  cplx tail = 0.0;
  for (int n = 1; n <= 7; ++n) {
    tail += bern[n - 1] / (2.0 * n) * pw;
    pw *= iw2;
  }
  return acc + std::log(w) - 0.5 / w - tail;
}

// Rising factorial (a)_n.
inline cplx pochhammer(cplx a, long n) {
  cplx prod = 1.0;
  for (long k = 0; k < n; ++k) prod *= a + double(k);
  return prod;
}

}  // namespace hgft
