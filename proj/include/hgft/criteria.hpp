#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>

#include "hgft/errors.hpp"
#include "hgft/gamma.hpp"
#include "hgft/hyp2f1.hpp"
#include "hgft/types.hpp"

namespace hgft {

enum class VerdictStatus { Holds, Fails, Boundary, NotApplicable };

inline const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "Holds";
    case VerdictStatus::Fails: return "Fails";
    case VerdictStatus::Boundary: return "Boundary";
    case VerdictStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

// Outcome of a symbolic criterion.  margin is the signed slack of the
// binding constraint; |margin| <= boundary_tol yields Boundary rather than
// a guess (equality cases are sometimes salvageable, sometimes not, and the
// artifact must not decide them).
struct Verdict {
  VerdictStatus status = VerdictStatus::NotApplicable;
  double margin = 0.0;
  std::string diagnostics;
};

inline constexpr double boundary_tol = 1e-9;
inline constexpr double realness_tol = 1e-12;
inline constexpr double angle_tol = 1e-9;

namespace detail {

inline double magnitude_scale(std::initializer_list<cplx> vs) {
  double s = 1.0;
  for (cplx v : vs) s = std::max(s, std::abs(v));
  return s;
}

inline bool is_real(cplx v, double scale) {
  return std::abs(v.imag()) <= realness_tol * std::max(1.0, scale);
}

// Conjunction of inequality slacks, each required >= 0.
inline Verdict verdict_from_slacks(std::initializer_list<double> slacks, std::string diag = {}) {
  double m = std::numeric_limits<double>::infinity();
  bool fails = false;
  bool boundary = false;
  for (double s : slacks) {
    m = std::min(m, s);
    if (s < -boundary_tol) {
      fails = true;
    } else if (s <= boundary_tol) {
      boundary = true;
    }
  }
  VerdictStatus st = fails      ? VerdictStatus::Fails
                     : boundary ? VerdictStatus::Boundary
                                : VerdictStatus::Holds;
  return {st, m, std::move(diag)};
}

}  // namespace detail

// (L, M, N) coefficients of the sufficiency quadratic L s^2 - 2 M s + N.
struct QuadraticFormLMN {
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
  double det() const { return L * N - M * M; }
  bool psd() const { return L >= 0.0 && N >= 0.0 && det() >= 0.0; }
};

struct SufficiencyResult {
  Verdict verdict;
  QuadraticFormLMN lmn;
};

// Data of the purely-imaginary-shift case c - a - b = 1 + is.
struct CaseIIData {
  double s = 0.0;
  cplx w1;
  double R1 = 0.0;
  double R1_alt = 0.0;  // via Gamma(a+is)Gamma(b+is); should agree with R1
};

struct AnnulusBounds {
  cplx w0;
  double R = 0.0;
  double inner = 0.0;
  double outer = 0.0;
};

enum class NecessaryCase { I, II, III, IV, V };

inline const char* necessary_case_name(NecessaryCase k) {
  switch (k) {
    case NecessaryCase::I: return "i";
    case NecessaryCase::II: return "ii";
    case NecessaryCase::III: return "iii";
    case NecessaryCase::IV: return "iv";
    case NecessaryCase::V: return "v";
  }
  return "?";
}

struct NecessaryResult {
  NecessaryCase kase = NecessaryCase::I;
  Verdict verdict;
  std::optional<CaseIIData> case2;
};

// Necessary condition for f(z) = z 2F1(a,b;c;z) to be lambda-spirallike,
// dispatched on c - a - b.
inline NecessaryResult necessary_spirallike(const ParamTriple& p, SpiralAngle lam) {
  p.validate();
  const double l = lam.value();
  cplx d = p.c - p.a - p.b;
  const double scale = detail::magnitude_scale({p.a, p.b, p.c});
  double re = d.real();
  if (std::abs(re - 1.0) <= 1e-12 * std::max(1.0, scale)) re = 1.0;
  if (std::abs(re) <= 1e-12 * std::max(1.0, scale)) re = 0.0;
  const double im = d.imag();
  const bool im_zero = std::abs(im) <= 1e-12 * std::max(1.0, scale);

  NecessaryCase kase;
  if (re > 1.0) {
    kase = NecessaryCase::I;
  } else if (re == 1.0) {
    kase = im_zero ? NecessaryCase::III : NecessaryCase::II;
  } else if (re >= 0.0) {
    kase = NecessaryCase::IV;
  } else {
    kase = NecessaryCase::V;
  }

  if (p.ab_zero()) {
    return {kase, {VerdictStatus::NotApplicable, 0.0, "ab = 0: f(z) = z is trivially spirallike"}, {}};
  }
  cplx ab = p.a * p.b;

  switch (kase) {
    case NecessaryCase::I: {
      cplx w = 1.0 + ab / (d - 1.0);
      double diff = std::abs(wrap_angle(l - std::arg(w)));
      return {kase, detail::verdict_from_slacks({num::pi / 2 - diff}, "|lambda - arg h(1)| <= pi/2"), {}};
    }
    case NecessaryCase::II: {
      double s = im;
      CaseIIData data;
      data.s = s;
      data.w1 = 1.0 - cplx(0.0, 1.0) * ab / s;
      data.R1 = std::abs(gamma_quotient({p.c - p.a, p.c - p.b}, {p.a, p.b}) / s) *
                std::exp(num::pi * std::abs(s) / 2.0);
      cplx is{0.0, s};
      data.R1_alt = std::abs((p.a + is) * (p.b + is) / s *
                             gamma_quotient({p.a + is, p.b + is}, {p.a, p.b})) *
                    std::exp(num::pi * std::abs(s) / 2.0);
      double univ = std::abs(data.w1) - data.R1;
      if (univ < -boundary_tol) {
        return {kase, {VerdictStatus::Fails, univ, "local-univalence obstruction: R1 > |w1|"}, data};
      }
      double ratio = std::clamp(data.R1 / std::abs(data.w1), -1.0, 1.0);
      double diff = std::abs(wrap_angle(l - std::arg(data.w1)));
      Verdict v = detail::verdict_from_slacks({univ, std::acos(ratio) - diff},
                                              "|lambda - arg w1| <= arccos(R1/|w1|)");
      return {kase, v, data};
    }
    case NecessaryCase::III: {
      double diff = std::abs(wrap_angle(l - std::arg(ab)));
      return {kase, detail::verdict_from_slacks({num::pi / 2 - diff}, "|lambda - arg(ab)| <= pi/2"), {}};
    }
    case NecessaryCase::IV: {
      if (!im_zero) {
        return {kase, {VerdictStatus::Fails, -std::abs(im),
                       "c - a - b must be real when 0 <= Re(c-a-b) < 1"},
                {}};
      }
      double alpha = std::clamp(re, 0.0, 1.0);
      double arg = wrap_angle((log_gamma(p.c - p.a) + log_gamma(p.c - p.b) - log_gamma(p.a) -
                               log_gamma(p.b))
                                  .imag());
      double diff = std::abs(wrap_angle(l - arg));
      return {kase, detail::verdict_from_slacks(
                        {alpha * num::pi / 2 - diff},
                        "|lambda - arg(G(c-a)G(c-b)/G(a)G(b))| <= (c-a-b) pi/2"),
              {}};
    }
    case NecessaryCase::V: {
      double diff = std::abs(wrap_angle(l - std::arg(-d)));
      VerdictStatus st = diff <= angle_tol ? VerdictStatus::Holds : VerdictStatus::Fails;
      return {kase, {st, angle_tol - diff, "lambda = arg(a+b-c)"}, {}};
    }
  }
  return {kase, {}, {}};
}

// Starlikeness sufficiency for z 2F1(a,b;c;z): p = a+b+1-c real,
// Re[ab] > p, and (L, M, N) positive semidefinite.
inline SufficiencyResult sufficient_starlike(const ParamTriple& t) {
  t.validate();
  if (t.ab_zero()) {
    return {{VerdictStatus::NotApplicable, 0.0, "ab = 0: f(z) = z is starlike"}, {}};
  }
  const cplx a = t.a, b = t.b, c = t.c;
  const double scale = detail::magnitude_scale({a, b, c});
  cplx pc = a + b + 1.0 - c;
  if (!detail::is_real(pc, scale)) {
    return {{VerdictStatus::NotApplicable, -std::abs(pc.imag()), "a+b+1-c is not real"}, {}};
  }
  const double p = pc.real();
  const cplx ab = a * b;
  QuadraticFormLMN q;
  q.L = std::norm(c - 1.0) - std::norm(a + b) + p + 3.0 * ab.real();
  q.M = (ab * (std::conj(a) + std::conj(b) - 2.0)).imag();
  q.N = std::norm(c - 2.0) - std::norm(a - 1.0) * std::norm(b - 1.0) - p + ab.real();
  Verdict v = detail::verdict_from_slacks({ab.real() - p, q.L, q.N, q.det()});
  return {v, q};
}

// Convexity sufficiency for 2F1(a,b;c;z).  Alexander's correspondence makes
// this the starlikeness criterion at (a+1, b+1, c+1); the formulas below are
// that shift written out in (a, b, c).
inline SufficiencyResult sufficient_convex(const ParamTriple& t) {
  t.validate();
  const cplx a = t.a, b = t.b, c = t.c;
  if ((a + 1.0) * (b + 1.0) == cplx(0.0)) {
    return {{VerdictStatus::NotApplicable, 0.0, "(a+1)(b+1) = 0: 2F1 is affine"}, {}};
  }
  const double scale = detail::magnitude_scale({a, b, c});
  cplx pc = a + b + 2.0 - c;
  if (!detail::is_real(pc, scale)) {
    return {{VerdictStatus::NotApplicable, -std::abs(pc.imag()), "a+b-c is not real"}, {}};
  }
  const double p = pc.real();
  const cplx ab1 = (a + 1.0) * (b + 1.0);
  QuadraticFormLMN q;
  q.L = std::norm(c) - std::norm(a + b + 2.0) + p + 3.0 * ab1.real();
  q.M = (ab1 * (std::conj(a) + std::conj(b))).imag();
  q.N = std::norm(c - 1.0) - std::norm(a) * std::norm(b) - p + ab1.real();
  Verdict v = detail::verdict_from_slacks({ab1.real() - p, q.L, q.N, q.det()});
  return {v, q};
}

// Spirallikeness sufficiency for z 2F1(a,b;a+b+1;z), 0 < |lambda| < pi/2.
inline SufficiencyResult sufficient_spirallike(cplx a, cplx b, SpiralAngle lam) {
  const double l = lam.value();
  if (l == 0.0) {
    throw lambda_zero_error("sufficient_spirallike needs lambda != 0; use sufficient_starlike");
  }
  if (a == cplx(0.0) || b == cplx(0.0)) {
    return {{VerdictStatus::NotApplicable, 0.0, "ab = 0: f(z) = z is spirallike"}, {}};
  }
  const cplx e1 = std::polar(1.0, -l);
  const cplx e2 = std::polar(1.0, -2.0 * l);
  const cplx q = e1 * a * b;
  const double cl = std::cos(l);
  QuadraticFormLMN f;
  f.L = (q * (2.0 + e2)).real();
  f.M = (q * (std::conj(a) + std::conj(b) - 2.0 * e1 * cl)).imag();
  f.N = (q * (2.0 * std::conj(a) + 2.0 * std::conj(b) - e2 -
              std::polar(1.0, l) * std::conj(a) * std::conj(b) / cl))
            .real();
  Verdict v = detail::verdict_from_slacks({q.real(), f.L, f.N, f.det()});
  return {v, f};
}

// Reduction of the spirallikeness criterion when q = e^{-i lambda} ab is a
// positive real number.
inline Verdict cor1_check(cplx a, cplx b, SpiralAngle lam) {
  const double l = lam.value();
  if (l == 0.0) return {VerdictStatus::NotApplicable, 0.0, "requires lambda != 0"};
  const double scale = detail::magnitude_scale({a, b});
  cplx qc = std::polar(1.0, -l) * a * b;
  if (!detail::is_real(qc, scale * scale) || qc.real() <= 0.0) {
    return {VerdictStatus::NotApplicable, 0.0, "e^{-i lambda} ab is not a positive real"};
  }
  const double q = qc.real();
  const double c2 = std::cos(2.0 * l);
  double lhs = (2.0 + c2) * (2.0 * (a + b).real() - c2 - q / std::cos(l)) -
               std::pow((a + b).imag() - std::sin(2.0 * l), 2);
  return detail::verdict_from_slacks({lhs});
}

// Reduction when q = ab is a positive real number, 0 < |lambda| < pi/3.
inline Verdict cor2_check(cplx a, cplx b, SpiralAngle lam) {
  const double l = lam.value();
  if (l == 0.0 || std::abs(l) >= num::pi / 3.0) {
    return {VerdictStatus::NotApplicable, 0.0, "requires 0 < |lambda| < pi/3"};
  }
  const double scale = detail::magnitude_scale({a, b});
  cplx qc = a * b;
  if (!detail::is_real(qc, scale * scale) || qc.real() <= 0.0) {
    return {VerdictStatus::NotApplicable, 0.0, "ab is not a positive real"};
  }
  const double q = qc.real();
  const double cl = std::cos(l);
  cplx w = std::polar(1.0, l) * (a + b);
  double rhs = (4.0 * cl * cl - 1.0) *
               (2.0 * w.real() * cl - 4.0 * std::pow(cl, 4) + 3.0 * cl * cl - q);
  double lhs = std::pow(w.imag() - 2.0 * std::sin(2.0 * l) * cl, 2);
  return detail::verdict_from_slacks({rhs - lhs});
}

// Strong starlikeness of order alpha for z 2F1(a,b;a+b+1;z) with a+b real
// and ab > 0, 1/3 < alpha < 1.
inline Verdict strongly_starlike_check(cplx a, cplx b, double alpha) {
  if (!(alpha > 1.0 / 3.0 && alpha < 1.0)) {
    return {VerdictStatus::NotApplicable, 0.0, "requires 1/3 < alpha < 1"};
  }
  const double scale = detail::magnitude_scale({a, b});
  if (!detail::is_real(a + b, scale) || !detail::is_real(a * b, scale * scale) ||
      (a * b).real() <= 0.0) {
    return {VerdictStatus::NotApplicable, 0.0, "requires a+b real and ab > 0"};
  }
  const double p = (a + b).real();
  const double q = (a * b).real();
  const double k = std::pow(std::sin(num::pi * alpha / 2.0), 2);
  double lhs = ((p * p - 4.0 * q) + 6.0 * p - 3.0) * k - (p * p - q);
  return detail::verdict_from_slacks({lhs});
}

// Ellipse membership for the conjugate pair a = s+it, b = s-it, c = 2s+1.
inline Verdict cor_ss_ellipse(double s, double t, double alpha) {
  if (!(alpha > 1.0 / 3.0 && alpha < 1.0)) {
    return {VerdictStatus::NotApplicable, 0.0, "requires 1/3 < alpha < 1"};
  }
  const double k = std::pow(std::sin(num::pi * alpha / 2.0), 2);
  double lhs = std::pow(s - 2.0 * k, 2) + (4.0 * k - 1.0) * t * t / 3.0;
  double rhs = k * (4.0 * k - 1.0);
  return detail::verdict_from_slacks({rhs - lhs});
}

enum class ThmACase { i, ii, iii, none };

inline const char* thma_case_name(ThmACase k) {
  switch (k) {
    case ThmACase::i: return "i";
    case ThmACase::ii: return "ii";
    case ThmACase::iii: return "iii";
    case ThmACase::none: return "none";
  }
  return "?";
}

struct ThmASigmaResult {
  ThmACase kase = ThmACase::none;
  double sigma = std::numeric_limits<double>::quiet_NaN();
  bool is_exact = false;
};

// Known exact values / bounds for the order of starlikeness sigma(f).
// Case (i): exact sigma from the z = -1 evaluation.  Case (ii): closed form
// sigma = 1 + ab/(c-a-b-1), which equals h(1) (see the decisions ledger on
// the sign).  Case (iii): the lower bound 1 - a/2 only.
inline ThmASigmaResult thmA_sigma(const ParamTriple& t) {
  t.validate();
  const double scale = detail::magnitude_scale({t.a, t.b, t.c});
  const bool all_real = detail::is_real(t.a, scale) && detail::is_real(t.b, scale) &&
                        detail::is_real(t.c, scale);
  const double ar = t.a.real(), br = t.b.real(), cr = t.c.real();
  if (all_real && ar > 0.0 && ar <= br && br <= cr) {
    cplx f = gauss_2f1(t, cplx(-1.0)).value;
    cplx fp = d2f1(t, cplx(-1.0)).value;
    return {ThmACase::i, (1.0 - fp / f).real(), true};
  }
  if (all_real && ar >= -1.0 && ar < 0.0 && br > 0.0 && cr - ar - br > 1.0) {
    return {ThmACase::ii, 1.0 + ar * br / (cr - ar - br - 1.0), true};
  }
  if (detail::is_real(t.a, scale) && ar >= 0.0 && 2.0 * t.b.real() <= ar + 1.0 &&
      std::abs(t.c - (t.a - std::conj(t.b) + 1.0)) <= realness_tol * std::max(1.0, scale)) {
    return {ThmACase::iii, 1.0 - ar / 2.0, false};
  }
  return {};
}

// Lower bound of Theorem A case (i): 1 - ab/(b+c).
inline double thmA_case_i_bound(const ParamTriple& t) {
  return 1.0 - (t.a.real() * t.b.real()) / (t.b.real() + t.c.real());
}

// Starlikeness via any of the three prior-work clauses.
inline Verdict corB_starlike(const ParamTriple& t) {
  t.validate();
  const double scale = detail::magnitude_scale({t.a, t.b, t.c});
  const bool all_real = detail::is_real(t.a, scale) && detail::is_real(t.b, scale) &&
                        detail::is_real(t.c, scale);
  const double ar = t.a.real(), br = t.b.real(), cr = t.c.real();

  Verdict best{VerdictStatus::Fails, -std::numeric_limits<double>::infinity(),
               "no clause applies"};
  auto consider = [&best](const Verdict& v) {
    auto rank = [](VerdictStatus s) {
      switch (s) {
        case VerdictStatus::Holds: return 3;
        case VerdictStatus::Boundary: return 2;
        case VerdictStatus::Fails: return 1;
        case VerdictStatus::NotApplicable: return 0;
      }
      return 0;
    };
    if (rank(v.status) > rank(best.status) ||
        (rank(v.status) == rank(best.status) && v.margin > best.margin)) {
      best = v;
    }
  };

  if (all_real && ar > 0.0 && ar <= br && br <= cr) {
    Verdict v = detail::verdict_from_slacks({br + cr - ar * br}, "clause (i): ab <= b+c");
    consider(v);
  }
  if (all_real && ar >= -1.0 && ar < 0.0 && br > 0.0) {
    Verdict v = detail::verdict_from_slacks({cr - ar - br - (1.0 - ar * br)},
                                            "clause (ii): c-a-b >= 1-ab");
    consider(v);
  }
  if (detail::is_real(t.a, scale) && ar >= 0.0 && ar <= 2.0 &&
      2.0 * t.b.real() <= ar + 1.0 &&
      std::abs(t.c - (t.a - std::conj(t.b) + 1.0)) <= realness_tol * std::max(1.0, scale)) {
    Verdict v = detail::verdict_from_slacks({std::min(ar + 1.0 - 2.0 * t.b.real(), 2.0 - ar)},
                                            "clause (iii): c = a - conj(b) + 1");
    consider(v);
  }
  return best;
}

// |f''(0)/2| = |ab/c| <= 2 is necessary for starlikeness.
inline Verdict coefficient_bound_check(const ParamTriple& t) {
  t.validate();
  if (t.ab_zero()) return {VerdictStatus::Holds, 2.0, "ab = 0"};
  double m = 2.0 - std::abs(t.a * t.b / t.c);
  return detail::verdict_from_slacks({m}, "|ab/c| <= 2 (necessary only)");
}

// 2F1 is bounded on the disk precisely when Re(c-a-b) >= 0 and c-a-b != 0.
inline bool boundedness(const ParamTriple& t) {
  t.validate();
  cplx d = t.c - t.a - t.b;
  const double scale = detail::magnitude_scale({t.a, t.b, t.c});
  return d.real() >= 0.0 && std::abs(d) > 1e-12 * std::max(1.0, scale);
}

// Cluster-set annulus around w0 for c = a + b + is, s != 0.
inline AnnulusBounds cluster_annulus(const ParamTriple& t) {
  t.validate();
  cplx d = t.c - t.a - t.b;
  const double scale = detail::magnitude_scale({t.a, t.b, t.c});
  const double tol = 1e-12 * std::max(1.0, scale);
  if (std::abs(d.real()) > tol || std::abs(d.imag()) <= tol) {
    throw not_zero_imbalanced_error("cluster_annulus needs c - a - b purely imaginary nonzero");
  }
  const double s = d.imag();
  AnnulusBounds bounds;
  bounds.w0 = gamma_quotient({t.c, d}, {t.c - t.a, t.c - t.b});
  bounds.R = std::abs(gamma_quotient({t.c, -d}, {t.a, t.b}));
  bounds.inner = bounds.R * std::exp(-num::pi * std::abs(s) / 2.0);
  bounds.outer = bounds.R * std::exp(num::pi * std::abs(s) / 2.0);
  return bounds;
}

}  // namespace hgft
