#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgft/criteria.hpp"
#include "hgft/hyp2f1.hpp"
#include "hgft/types.hpp"

namespace hgft {

// Radial/angular sampling plan for disk scans.
struct SampleGrid {
  std::vector<double> radii;
  int angular_count = 4096;
  int refine_steps = 3;

  void validate() const {
    if (angular_count < 64) throw std::invalid_argument("angular_count must be >= 64");
    double prev = 0.0;
    for (double r : radii) {
      if (!(r > prev && r < 1.0)) {
        throw std::invalid_argument("radii must be strictly increasing in (0, 1)");
      }
      prev = r;
    }
  }

  // Radii 1 - 2^-k for k = 1..13 plus 0.9999; 4096 angles; 3 refinement
  // rounds.  Infima for these families typically live at r -> 1.
  static SampleGrid standard() {
    SampleGrid g;
    for (int k = 1; k <= 13; ++k) g.radii.push_back(1.0 - std::ldexp(1.0, -k));
    g.radii.push_back(0.9999);
    std::sort(g.radii.begin(), g.radii.end());
    return g;
  }

  // Cheaper plan for wide sweeps.
  static SampleGrid coarse() {
    SampleGrid g;
    g.radii = {0.5, 0.8, 0.95, 0.99, 0.999, 0.9999};
    g.angular_count = 1024;
    g.refine_steps = 2;
    return g;
  }
};

struct SampleReport {
  double extremal_value = 0.0;
  cplx extremal_z;
  long samples_evaluated = 0;
  bool pole_suspected = false;
  double est_error = 0.0;
};

// Which kernel branches a scan exercised and the worst per-evaluation error
// estimate it saw.
struct KernelStats {
  long method_counts[6] = {0, 0, 0, 0, 0, 0};
  double max_est_error = 0.0;
  void add(const EvalResult& r) {
    method_counts[static_cast<int>(r.method)] += 1;
    max_est_error = std::max(max_est_error, r.est_abs_error);
  }
};

// h(z) = z f'(z)/f(z) = 1 + (ab z / c) 2F1(a+1,b+1;c+1;z) / 2F1(a,b;c;z).
inline cplx radial_quotient(const ParamTriple& p, cplx z) {
  p.validate();
  if (z == cplx(0.0) || p.ab_zero()) return cplx(1.0);
  cplx f = gauss_2f1(p, z).value;
  if (std::abs(f) < 1e-12) {
    throw quotient_pole_error("radial_quotient: |F(z)| below pole threshold");
  }
  cplx fs = gauss_2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0}, z).value;
  return 1.0 + (p.a * p.b * z / p.c) * fs / f;
}

namespace detail {

inline constexpr double near_one_notch = 1e-3;  // keep |1 - z| >= this on the unit circle
inline constexpr double refine_radius_cap = 1.0 - 1e-6;

// Grid extremum of obj(h(z)) with golden-section angular refinement and a
// radial push toward the boundary.  minimize=false flips to a supremum
// search.  Samples where the quotient degenerates are flagged and skipped;
// the reduction is deterministic (smallest angle index, then radius index).
struct DiskScan {
  const ParamTriple& p;
  std::function<double(cplx)> obj;
  bool minimize = true;
  bool arg_mode = false;  // arg h is undefined where |h| vanishes
  KernelStats* stats = nullptr;
  long evaluated = 0;
  bool degenerate = false;

  double sample(cplx z) {
    ++evaluated;
    EvalResult f = gauss_2f1(p, z);
    if (stats) stats->add(f);
    if (std::abs(f.value) < 1e-12) {
      degenerate = true;
      return std::numeric_limits<double>::quiet_NaN();
    }
    EvalResult fs = gauss_2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0}, z);
    if (stats) stats->add(fs);
    cplx h = 1.0 + (p.a * p.b * z / p.c) * fs.value / f.value;
    if (arg_mode && std::abs(h) < 1e-12) {
      degenerate = true;
      return std::numeric_limits<double>::quiet_NaN();
    }
    return obj(h);
  }

  double score(double v) const { return minimize ? v : -v; }
};

}  // namespace detail

// Extremum of a functional of h over the disk grid.  Used for the weighted
// infimum (minimize) and the strong-order supremum (maximize).
inline SampleReport scan_quotient(const ParamTriple& p, const SampleGrid& grid,
                                  const std::function<double(cplx)>& objective, bool minimize,
                                  KernelStats* stats = nullptr, bool arg_mode = false) {
  p.validate();
  grid.validate();
  if (p.ab_zero()) {
    return {objective(cplx(1.0)), cplx(0.0), 1, false, 0.0};
  }

  detail::DiskScan scan{p, objective, minimize, arg_mode, stats};
  std::vector<double> radii = grid.radii;
  bool unit_ring = (p.c - p.a - p.b).real() > 0.0;
  if (unit_ring) radii.push_back(1.0);

  double best = std::numeric_limits<double>::infinity();  // in score space
  double best_val = 0.0;
  cplx best_z;
  double best_theta = 0.0, best_r = 0.0;
  long best_aidx = -1, best_ridx = -1;

  const int n = grid.angular_count;
  for (long ri = 0; ri < long(radii.size()); ++ri) {
    double r = radii[ri];
    for (long ai = 0; ai < n; ++ai) {
      double theta = 2.0 * num::pi * double(ai) / double(n);
      cplx z = std::polar(r, theta);
      if (std::abs(1.0 - z) < detail::near_one_notch && r >= 1.0) continue;
      if (z == cplx(1.0)) continue;
      double v = scan.sample(z);
      if (std::isnan(v)) continue;
      double s = scan.score(v);
      if (s < best || (s == best && (ai < best_aidx || (ai == best_aidx && ri < best_ridx)))) {
        best = s;
        best_val = v;
        best_z = z;
        best_theta = theta;
        best_r = r;
        best_aidx = ai;
        best_ridx = ri;
      }
    }
  }

  // Angular golden-section rounds around the current extremum.
  double before_refine = best;
  const double gr = 0.6180339887498949;
  double half_width = 2.0 * num::pi / double(n);
  for (int round = 0; round < grid.refine_steps; ++round) {
    double lo = best_theta - half_width, hi = best_theta + half_width;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double round_best_theta = best_theta;
    auto at = [&](double th) {
      cplx z = std::polar(best_r, th);
      if (best_r >= 1.0 && std::abs(1.0 - z) < detail::near_one_notch) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      double v = scan.sample(z);
      if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
      double s = scan.score(v);
      if (s < best) {
        best = s;
        best_val = v;
        best_z = z;
        round_best_theta = th;
      }
      return s;
    };
    double f1 = at(x1), f2 = at(x2);
    for (int it = 0; it < 14; ++it) {
      if (std::isnan(f1) || std::isnan(f2)) break;
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = at(x2);
      }
    }
    best_theta = round_best_theta;
    half_width *= 2.0 * (1.0 - gr);
  }

  // One radial bisection stage toward the boundary at the refined angle.
  double after_angle = best;
  {
    double r_cur = best_r;
    double r_hi = detail::refine_radius_cap;
    if (unit_ring && std::abs(1.0 - std::polar(1.0, best_theta)) >= detail::near_one_notch) {
      r_hi = 1.0;
    }
    for (int it = 0; it < 12 && r_hi - r_cur > 1e-9; ++it) {
      double mid = 0.5 * (r_cur + r_hi);
      cplx z = std::polar(mid, best_theta);
      if (std::abs(1.0 - z) < 1e-12) break;
      double v = scan.sample(z);
      if (std::isnan(v)) break;
      double s = scan.score(v);
      if (s < best) {
        best = s;
        best_val = v;
        best_z = z;
        r_cur = mid;
      } else {
        r_hi = mid;
      }
    }
  }

  SampleReport rep;
  rep.extremal_value = best_val;
  rep.extremal_z = best_z;
  rep.samples_evaluated = scan.evaluated;
  rep.pole_suspected = scan.degenerate;
  rep.est_error = std::abs(best - after_angle) + 0.5 * std::abs(after_angle - before_refine);
  return rep;
}

// min over the grid of Re(e^{-i lambda} h(z)); lambda = 0 estimates sigma(f).
inline SampleReport min_weighted_real(const ParamTriple& p, double lambda, const SampleGrid& g,
                                      KernelStats* stats = nullptr) {
  if (!(lambda > -num::pi / 2 && lambda < num::pi / 2)) {
    throw std::invalid_argument("lambda must lie in (-pi/2, pi/2)");
  }
  cplx rot = std::polar(1.0, -lambda);
  return scan_quotient(p, g, [rot](cplx h) { return (rot * h).real(); }, true, stats);
}

inline SampleReport sigma_estimate(const ParamTriple& p, const SampleGrid& g) {
  return min_weighted_real(p, 0.0, g);
}

// sup over the grid of (2/pi) |arg h(z)|: an estimate of the least order of
// strong starlikeness.
inline SampleReport strong_order_estimate(const ParamTriple& p, const SampleGrid& g) {
  return scan_quotient(
      p, g, [](cplx h) { return 2.0 / num::pi * std::abs(std::arg(h)); }, false, nullptr, true);
}

// Minimum of Re(e^{-i lambda} h) over a single circle of the given radius.
inline SampleReport ring_min_weighted_real(const ParamTriple& p, double lambda, double radius,
                                           int angular_count) {
  SampleGrid g;
  g.radii = {radius};
  g.angular_count = angular_count;
  g.refine_steps = 2;
  return min_weighted_real(p, lambda, g);
}

struct QuotientRow {
  double theta = 0.0;
  double r = 0.0;
  cplx h;
  bool pole = false;
};

// One row per grid sample of h, radius-major then angle, for CSV export.
inline std::vector<QuotientRow> quotient_rows(const ParamTriple& p, const SampleGrid& g) {
  p.validate();
  g.validate();
  std::vector<QuotientRow> rows;
  rows.reserve(g.radii.size() * size_t(g.angular_count));
  for (double r : g.radii) {
    for (int ai = 0; ai < g.angular_count; ++ai) {
      double theta = 2.0 * num::pi * double(ai) / double(g.angular_count);
      QuotientRow row{theta, r, cplx(0.0), false};
      try {
        row.h = radial_quotient(p, std::polar(r, theta));
      } catch (const quotient_pole_error&) {
        row.pole = true;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

struct ClusterSample {
  double theta = 0.0;
  double t = 0.0;
  cplx z;
  cplx value;
  int within_annulus = -1;  // -1: no annulus applies; else 0/1
};

struct ClusterProbeResult {
  std::vector<ClusterSample> samples;
  std::optional<AnnulusBounds> bounds;
};

// Samples of F along the rays z = 1 - t e^{i theta}; when c - a - b is
// purely imaginary the cluster annulus is attached and each sample gets a
// containment flag with 5% relative slack.
inline ClusterProbeResult cluster_probe(const ParamTriple& p, std::span<const double> thetas,
                                        std::span<const double> ts) {
  p.validate();
  ClusterProbeResult out;
  try {
    out.bounds = cluster_annulus(p);
  } catch (const not_zero_imbalanced_error&) {
    out.bounds.reset();
  }
  for (double theta : thetas) {
    if (!(theta > -num::pi / 2 && theta < num::pi / 2)) {
      throw std::invalid_argument("cluster_probe: theta must lie in (-pi/2, pi/2)");
    }
    for (double t : ts) {
      cplx z = 1.0 - std::polar(t, theta);
      if (std::abs(z) >= 1.0) {
        throw std::invalid_argument("cluster_probe: sample point is outside the open disk");
      }
      ClusterSample s;
      s.theta = theta;
      s.t = t;
      s.z = z;
      s.value = gauss_2f1(p, z).value;
      if (out.bounds) {
        double dist = std::abs(s.value - out.bounds->w0);
        s.within_annulus =
            (dist >= 0.95 * out.bounds->inner && dist <= 1.05 * out.bounds->outer) ? 1 : 0;
      }
      out.samples.push_back(s);
    }
  }
  return out;
}

// n uniformly spaced samples of f(r e^{i theta}) = r e^{i theta} F(...);
// the polyline closes from the last sample back to the first.
inline std::vector<cplx> boundary_image(const ParamTriple& p, double r, long n) {
  p.validate();
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("boundary_image: r must be in (0, 1)");
  if (n <= 0) throw std::invalid_argument("boundary_image: n must be positive");
  std::vector<cplx> pts;
  pts.reserve(size_t(n));
  for (long j = 0; j < n; ++j) {
    double theta = 2.0 * num::pi * double(j) / double(n);
    cplx z = std::polar(r, theta);
    pts.push_back(z * gauss_2f1(p, z).value);
  }
  return pts;
}

// Discrete winding number of a closed polyline about w, in turns.
inline double winding_number(std::span<const cplx> pts, cplx w) {
  double total = 0.0;
  for (size_t j = 0; j < pts.size(); ++j) {
    cplx u = pts[j] - w;
    cplx v = pts[(j + 1) % pts.size()] - w;
    total += wrap_angle(std::arg(v) - std::arg(u));
  }
  return total / (2.0 * num::pi);
}

struct ConsistencyReport {
  ParamTriple triple;
  double lambda = 0.0;
  NecessaryResult necessary;
  std::string sufficient_kind;  // "thm:st", "thm:spl" or "none"
  std::optional<SufficiencyResult> sufficient;
  Verdict corB;
  Verdict coefficient_bound;
  bool bounded = false;
  SampleReport min_report;
  double ring_min = 0.0;  // min of Re(e^{-i lambda} h) on the 0.9999 circle
  KernelStats kernel;
  std::vector<std::string> contradictions;
};

// Runs the symbolic predicates next to the numeric scan and flags
// contradictions between them.
inline ConsistencyReport consistency_report(const ParamTriple& p, double lambda,
                                            const SampleGrid& grid) {
  ConsistencyReport rep;
  rep.triple = p;
  rep.lambda = lambda;
  rep.necessary = necessary_spirallike(p, SpiralAngle(lambda));
  const double scale = detail::magnitude_scale({p.a, p.b, p.c});
  if (lambda == 0.0) {
    rep.sufficient_kind = "thm:st";
    rep.sufficient = sufficient_starlike(p);
  } else if (std::abs(p.c - (p.a + p.b + 1.0)) <= 1e-9 * std::max(1.0, scale)) {
    rep.sufficient_kind = "thm:spl";
    rep.sufficient = sufficient_spirallike(p.a, p.b, SpiralAngle(lambda));
  } else {
    rep.sufficient_kind = "none";
  }
  rep.corB = corB_starlike(p);
  rep.coefficient_bound = coefficient_bound_check(p);
  rep.bounded = boundedness(p);
  rep.min_report = min_weighted_real(p, lambda, grid, &rep.kernel);
  rep.ring_min = ring_min_weighted_real(p, lambda, 0.9999, grid.angular_count).extremal_value;

  if (rep.sufficient && rep.sufficient->verdict.status == VerdictStatus::Holds &&
      rep.sufficient->verdict.margin > 1e-6 && rep.min_report.extremal_value < -1e-6) {
    rep.contradictions.push_back("sufficient condition holds but the numeric minimum is negative");
  }
  if (rep.ring_min > 1e-3 && rep.necessary.verdict.status == VerdictStatus::Fails &&
      rep.necessary.verdict.margin < -1e-6) {
    rep.contradictions.push_back(
        "necessary condition fails but the quotient is numerically positive");
  }
  return rep;
}

}  // namespace hgft
