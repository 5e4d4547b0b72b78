#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "hgft/errors.hpp"
#include "hgft/gamma.hpp"
#include "hgft/types.hpp"

namespace hgft {

enum class Method {
  Series,
  Pfaff,
  ConnectionNearOne,
  ZeroBalancedAsymptote,
  PerturbedConnection,
  TaylorContinuation,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Series: return "Series";
    case Method::Pfaff: return "Pfaff";
    case Method::ConnectionNearOne: return "ConnectionNearOne";
    case Method::ZeroBalancedAsymptote: return "ZeroBalancedAsymptote";
    case Method::PerturbedConnection: return "PerturbedConnection";
    case Method::TaylorContinuation: return "TaylorContinuation";
  }
  return "?";
}

struct EvalResult {
  cplx value;
  double est_abs_error = 0.0;
  Method method = Method::Series;
};

namespace detail {

inline constexpr double series_region = 0.7;
inline constexpr double pfaff_region = 0.7;
inline constexpr double connection_region = 0.5;
inline constexpr long series_cap = 100000;

struct SeriesOut {
  cplx sum;
  double err;
  long terms;
  bool converged;
};

// Defining power series; stops once three consecutive terms fall below
// 1e-16 of the partial sum.
inline SeriesOut series_2f1(cplx a, cplx b, cplx c, cplx z) {
  cplx term = 1.0;
  cplx sum = 1.0;
  double absacc = 1.0;
  int quiet = 0;
  for (long n = 0; n < series_cap; ++n) {
    term *= (a + double(n)) * (b + double(n)) * z / ((c + double(n)) * double(n + 1));
    sum += term;
    absacc += std::abs(term);
    if (std::abs(term) <= 1e-16 * std::abs(sum)) {
      if (++quiet >= 3) return {sum, 4e-16 * absacc + std::abs(term), n + 1, true};
    } else {
      quiet = 0;
    }
  }
  return {sum, 4e-16 * absacc + std::abs(term), series_cap, false};
}

// F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1)).
inline EvalResult eval_pfaff(cplx a, cplx b, cplx c, cplx z) {
  cplx pw = std::exp(-a * std::log(1.0 - z));
  SeriesOut s = series_2f1(a, c - b, c, z / (z - 1.0));
  return {pw * s.sum, std::abs(pw) * s.err, Method::Pfaff};
}

// Two-series expansion around z = 1; needs c - a - b away from the integers,
// otherwise c is nudged off the degenerate configuration and the reported
// error is inflated accordingly.
inline EvalResult eval_connection(cplx a, cplx b, cplx c, cplx z) {
  Method m = Method::ConnectionNearOne;
  double inflate = 0.0;
  cplx d = c - a - b;
  if (dist_to_integers(d) < 1e-6) {
    const cplx nudge{1e-8, 1e-8};
    c += nudge;
    d = c - a - b;
    inflate = 1e2 * std::abs(nudge);
    m = Method::PerturbedConnection;
  }
  cplx u = 1.0 - z;
  SeriesOut s1 = series_2f1(a, b, a + b - c + 1.0, u);
  SeriesOut s2 = series_2f1(c - a, c - b, d + 1.0, u);
  cplx g1 = gamma_quotient({c, d}, {c - a, c - b});
  cplx g2 = gamma_quotient({c, -d}, {a, b});
  cplx pw = std::exp(d * std::log(u));
  cplx t1 = g1 * s1.sum;
  cplx t2 = pw * g2 * s2.sum;
  double err = std::abs(g1) * s1.err + std::abs(pw) * std::abs(g2) * s2.err +
               4e-16 * (std::abs(t1) + std::abs(t2)) + inflate;
  return {t1 + t2, err, m};
}

struct PairOut {
  cplx f;
  cplx fp;
  double err;
};

// Taylor re-expansion step for the hypergeometric ODE: given (F, F') at w,
// advance to w + h.  Coefficients follow the three-term recurrence
//   w(1-w)(n+2)(n+1) t_{n+2} = -(n+1)[n(1-2w) + c-(a+b+1)w] t_{n+1}
//                               + (n+a)(n+b) t_n.
inline PairOut taylor_step(cplx a, cplx b, cplx c, cplx w, cplx h, const PairOut& at_w) {
  cplx ww1 = w * (1.0 - w);
  cplx t_n = at_w.f;
  cplx t_n1 = at_w.fp;
  cplx sumf = t_n + t_n1 * h;
  cplx sumfp = t_n1;
  cplx hn = h;  // h^(n+1) while producing t_{n+2}
  double absacc = std::abs(t_n) + std::abs(t_n1 * h);
  int quiet = 0;
  for (int n = 0; n < 600; ++n) {
    cplx t_n2 = (-(double(n) * (1.0 - 2.0 * w) + c - (a + b + 1.0) * w) * double(n + 1) * t_n1 +
                 (double(n) + a) * (double(n) + b) * t_n) /
                (ww1 * double(n + 2) * double(n + 1));
    sumfp += double(n + 2) * t_n2 * hn;
    hn *= h;
    cplx termf = t_n2 * hn;
    sumf += termf;
    absacc += std::abs(termf);
    t_n = t_n1;
    t_n1 = t_n2;
    if (std::abs(termf) <= 1e-17 * std::abs(sumf)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  double cond = std::abs(sumf) > 0.0 ? std::max(1.0, absacc / std::abs(sumf)) : 1.0;
  return {sumf, sumfp, at_w.err * cond + 4e-16 * absacc};
}

// Continuation into the lens where neither the direct, Pfaff, nor near-one
// series has ratio <= 0.7: series anchor on the same ray at |z0| = 0.65,
// then Taylor steps toward z.  Step length stays below a quarter of the
// distance to the ODE singularities at 0 and 1.
inline PairOut eval_taylor_far(cplx a, cplx b, cplx c, cplx z) {
  cplx w = 0.65 * (z / std::abs(z));
  SeriesOut s0 = series_2f1(a, b, c, w);
  SeriesOut s1 = series_2f1(a + 1.0, b + 1.0, c + 1.0, w);
  cplx k = a * b / c;
  PairOut cur{s0.sum, k * s1.sum, s0.err + std::abs(k) * s1.err};
  while (w != z) {
    double room = std::min(std::abs(w), std::abs(1.0 - w));
    double remaining = std::abs(z - w);
    cplx target;
    if (remaining <= 0.25 * room) {
      target = z;
    } else {
      target = w + (z - w) * (0.25 * room / remaining);
    }
    cur = taylor_step(a, b, c, w, target - w, cur);
    w = target;
  }
  return cur;
}

// Deterministic ordering of (a, b) so that swapping the symmetric parameters
// reproduces bit-identical results.
inline bool lex_less(cplx x, cplx y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

inline EvalResult eval_2f1(cplx a, cplx b, cplx c, cplx z) {
  if (lex_less(b, a)) std::swap(a, b);
  if (z == cplx(0.0)) return {cplx(1.0), 0.0, Method::Series};
  cplx d = c - a - b;
  if (z == cplx(1.0)) {
    if (d.real() > 0.0) {
      cplx v = gamma_quotient({c, d}, {c - a, c - b});
      return {v, 1e-14 * std::max(1.0, std::abs(v)), Method::ConnectionNearOne};
    }
    if (std::abs(d) <= 1e-12) {
      throw zero_balanced_boundary_error("2F1 diverges logarithmically at z = 1 when a + b = c");
    }
    throw too_close_to_one_error("2F1 diverges at z = 1 for Re(c-a-b) < 0");
  }
  if (std::abs(1.0 - z) < 1e-13) {
    throw too_close_to_one_error("z is inside the exclusion radius around 1");
  }
  if (std::abs(z) <= series_region) {
    SeriesOut s = series_2f1(a, b, c, z);
    return {s.sum, s.err, Method::Series};
  }
  if (std::abs(z / (z - 1.0)) <= pfaff_region) {
    return eval_pfaff(a, b, c, z);
  }
  if (std::abs(1.0 - z) <= connection_region) {
    // Near-integer c-a-b makes the two connection terms cancel at scale
    // 1/dist; prefer the continuation branch while there is still room to
    // step, fall back to the perturbed formula only close to 1.
    if (dist_to_integers(d) >= 1e-6 || std::abs(1.0 - z) < 0.05) {
      return eval_connection(a, b, c, z);
    }
  }
  PairOut p = eval_taylor_far(a, b, c, z);
  return {p.f, p.err, Method::TaylorContinuation};
}

}  // namespace detail

// 2F1(a,b;c;z) on the closed unit disk minus z = 1 (z = 1 itself is allowed
// when Re(c-a-b) > 0, via the Gauss evaluation).
inline EvalResult gauss_2f1(const ParamTriple& p, cplx z) {
  p.validate();
  if (std::abs(z) > 1.0 + 1e-12) {
    throw error("gauss_2f1: |z| > 1 is out of scope");
  }
  if (p.ab_zero()) return {cplx(1.0), 0.0, Method::Series};
  return detail::eval_2f1(p.a, p.b, p.c, z);
}

// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
inline EvalResult d2f1(const ParamTriple& p, cplx z) {
  p.validate();
  if (p.ab_zero()) return {cplx(0.0), 0.0, Method::Series};
  cplx k = p.a * p.b / p.c;
  EvalResult r = gauss_2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0}, z);
  return {k * r.value, std::abs(k) * r.est_abs_error, r.method};
}

// |(1-z) z F'' + [c-(a+b+1)z] F' - ab F| with the derivatives obtained from
// the shifted-parameter identity; a self-test metric for the kernel.
inline double ode_residual(const ParamTriple& p, cplx z) {
  p.validate();
  if (p.ab_zero()) return 0.0;
  cplx f0 = gauss_2f1(p, z).value;
  cplx f1 = d2f1(p, z).value;
  cplx k2 = (p.a * p.b / p.c) * ((p.a + 1.0) * (p.b + 1.0) / (p.c + 1.0));
  cplx f2 = k2 * gauss_2f1({p.a + 2.0, p.b + 2.0, p.c + 2.0}, z).value;
  return std::abs((1.0 - z) * z * f2 + (p.c - (p.a + p.b + 1.0) * z) * f1 - p.a * p.b * f0);
}

// Leading term of the zero-balanced (c = a+b) behaviour near z = 1:
// Gamma(a+b)/(Gamma(a)Gamma(b)) * (2 psi(1) - psi(a) - psi(b) - Log(1-z)).
inline cplx zero_balanced_asymptote(cplx a, cplx b, cplx z) {
  cplx r = -2.0 * num::euler_gamma - digamma(a) - digamma(b);
  return gamma_quotient({a + b}, {a, b}) * (r - std::log(1.0 - z));
}

}  // namespace hgft
