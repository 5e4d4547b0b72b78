#pragma once

#include <atomic>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hgft/parse.hpp"
#include "hgft/report.hpp"
#include "hgft/types.hpp"
#include "hgft/verifier.hpp"

namespace hgft {

class config_error : public error {
public:
  using error::error;
};

// One sweep axis: either a fixed complex value or a rectangular lattice
// re-min..re-max step re-step (x im-min..im-max step im-step).
struct AxisSpec {
  bool fixed = true;
  cplx value;
  double re_min = 0.0, re_max = 0.0, re_step = 1.0;
  bool has_im = false;
  double im_min = 0.0, im_max = 0.0, im_step = 1.0;

  std::vector<cplx> expand() const {
    if (fixed) return {value};
    auto axis = [](double lo, double hi, double step) {
      if (!(step > 0.0)) throw config_error("sweep step must be positive");
      std::vector<double> vs;
      for (long k = 0;; ++k) {
        double v = lo + double(k) * step;
        if (v > hi + 1e-9 * step) break;
        vs.push_back(v);
      }
      if (vs.empty()) throw config_error("empty sweep range");
      return vs;
    };
    std::vector<double> res = axis(re_min, re_max, re_step);
    std::vector<double> ims = has_im ? axis(im_min, im_max, im_step) : std::vector<double>{0.0};
    std::vector<cplx> out;
    out.reserve(res.size() * ims.size());
    for (double re : res) {
      for (double im : ims) out.emplace_back(re, im);
    }
    return out;
  }
};

struct SweepConfig {
  AxisSpec a, b, c;
  AxisSpec lambda;  // real only
  std::string output;
  int grid_angular = 1024;
  int grid_refine = 2;
  double radius_max = 0.9999;
};

namespace detail {

inline AxisSpec parse_axis(const std::string& text, bool real_only) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  AxisSpec ax;
  if (kind == "fixed") {
    std::string lit;
    in >> lit;
    auto v = parse_complex(lit);
    if (!v) throw config_error("bad complex literal: " + lit);
    if (real_only && v->imag() != 0.0) throw config_error("lambda must be real");
    ax.fixed = true;
    ax.value = *v;
  } else if (kind == "range") {
    ax.fixed = false;
    if (!(in >> ax.re_min >> ax.re_max >> ax.re_step)) {
      throw config_error("range needs <re-min> <re-max> <re-step>");
    }
    if (in >> ax.im_min >> ax.im_max >> ax.im_step) {
      if (real_only) throw config_error("lambda range must be real");
      ax.has_im = true;
    }
  } else {
    throw config_error("axis must be 'fixed <complex>' or 'range ...': got " + kind);
  }
  std::string rest;
  if (in >> rest) throw config_error("trailing tokens in axis spec: " + rest);
  return ax;
}

}  // namespace detail

// Flat key-value format: one "key = value" per line, '#' comments.
// Keys: a, b, c, lambda, output, grid_angular, grid_refine, radius_max.
inline SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  cfg.lambda.value = 0.0;
  bool have[4] = {false, false, false, false};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string_view sv = detail::trim(line);
    if (sv.empty()) continue;
    auto eq = sv.find('=');
    if (eq == std::string_view::npos) {
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key{detail::trim(sv.substr(0, eq))};
    std::string value{detail::trim(sv.substr(eq + 1))};
    if (key == "a") {
      cfg.a = detail::parse_axis(value, false);
      have[0] = true;
    } else if (key == "b") {
      cfg.b = detail::parse_axis(value, false);
      have[1] = true;
    } else if (key == "c") {
      cfg.c = detail::parse_axis(value, false);
      have[2] = true;
    } else if (key == "lambda") {
      cfg.lambda = detail::parse_axis(value, true);
      have[3] = true;
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "grid_angular") {
      cfg.grid_angular = std::stoi(value);
    } else if (key == "grid_refine") {
      cfg.grid_refine = std::stoi(value);
    } else if (key == "radius_max") {
      cfg.radius_max = std::stod(value);
    } else {
      throw config_error("line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (!(have[0] && have[1] && have[2])) throw config_error("keys a, b, c are required");
  if (cfg.output.empty()) throw config_error("key output is required");
  return cfg;
}

struct SweepPoint {
  ParamTriple triple;
  double lambda = 0.0;
};

inline std::vector<SweepPoint> expand_lattice(const SweepConfig& cfg) {
  std::vector<SweepPoint> pts;
  for (cplx a : cfg.a.expand()) {
    for (cplx b : cfg.b.expand()) {
      for (cplx c : cfg.c.expand()) {
        for (cplx l : cfg.lambda.expand()) {
          if (!(l.real() > -num::pi / 2 && l.real() < num::pi / 2)) {
            throw config_error("lambda outside (-pi/2, pi/2)");
          }
          pts.push_back({{a, b, c}, l.real()});
        }
      }
    }
  }
  return pts;
}

inline int sweep_thread_count() {
  if (const char* env = std::getenv("HGFT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

struct SweepResult {
  std::vector<json> records;  // lattice order
  long contradictions = 0;
  std::map<std::string, long> status_counts;
};

// Evaluates every lattice point in a worker pool; records keep lattice
// order, so the report is schedule-independent.
inline SweepResult run_sweep(const SweepConfig& cfg) {
  std::vector<SweepPoint> pts = expand_lattice(cfg);
  SampleGrid grid = SampleGrid::coarse();
  grid.angular_count = cfg.grid_angular;
  grid.refine_steps = cfg.grid_refine;
  std::erase_if(grid.radii, [&](double r) { return r > cfg.radius_max; });
  if (grid.radii.empty() || grid.radii.back() < cfg.radius_max) {
    grid.radii.push_back(cfg.radius_max);
  }

  std::vector<json> records(pts.size());
  std::vector<std::string> failures(pts.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= pts.size()) return;
      try {
        ConsistencyReport rep = consistency_report(pts[i].triple, pts[i].lambda, grid);
        records[i] = consistency_json(rep);
      } catch (const std::exception& e) {
        failures[i] = e.what();
        records[i] = json{{"triple", triple_json(pts[i].triple)},
                          {"lambda", pts[i].lambda},
                          {"error", e.what()}};
      }
    }
  };
  int nthreads = std::min<size_t>(sweep_thread_count(), pts.size());
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SweepResult out;
  out.records = std::move(records);
  for (const json& rec : out.records) {
    if (rec.contains("error")) continue;
    out.contradictions += rec["contradictions"].size();
    for (const char* key : {"necessary", "sufficient"}) {
      if (rec.contains(key) && rec[key].contains("status")) {
        out.status_counts[rec[key]["status"].get<std::string>()] += 1;
      }
    }
  }
  return out;
}

}  // namespace hgft
