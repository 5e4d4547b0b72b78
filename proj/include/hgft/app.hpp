#pragma once

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hgft/parse.hpp"
#include "hgft/report.hpp"
#include "hgft/sweep.hpp"

namespace hgft::app {

inline std::string iso_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace detail {

struct TripleFlags {
  std::string a, b, c;
  double lambda = 0.0;
  double lambda_deg = std::numeric_limits<double>::quiet_NaN();

  // exit 2 on malformed literals or lambda outside (-pi/2, pi/2)
  std::optional<ParamTriple> parse(std::ostream& err) const {
    auto pa = parse_complex(a);
    auto pb = parse_complex(b);
    auto pc = parse_complex(c);
    if (!pa || !pb || !pc) {
      err << "error: --a/--b/--c must be complex literals like 1.5-0.25i\n";
      return std::nullopt;
    }
    return ParamTriple{*pa, *pb, *pc};
  }

  std::optional<double> effective_lambda(std::ostream& err) const {
    double l = std::isnan(lambda_deg) ? lambda : lambda_deg * num::pi / 180.0;
    if (!(l > -num::pi / 2 && l < num::pi / 2)) {
      err << "error: lambda must lie in (-pi/2, pi/2)\n";
      return std::nullopt;
    }
    return l;
  }
};

inline void add_triple_flags(CLI::App* cmd, TripleFlags& f, bool with_lambda) {
  cmd->add_option("--a", f.a, "parameter a (complex literal)")->required();
  cmd->add_option("--b", f.b, "parameter b (complex literal)")->required();
  cmd->add_option("--c", f.c, "parameter c (complex literal)")->required();
  if (with_lambda) {
    auto* lr = cmd->add_option("--lambda", f.lambda, "spiral angle in radians (default 0)");
    cmd->add_option("--lambda-deg", f.lambda_deg, "spiral angle in degrees")->excludes(lr);
  }
}

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

inline bool write_svg(std::ostream& out, const std::vector<cplx>& pts) {
  double xmin = pts[0].real(), xmax = xmin, ymin = -pts[0].imag(), ymax = ymin;
  for (cplx p : pts) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, -p.imag());
    ymax = std::max(ymax, -p.imag());
  }
  double w = xmax - xmin, h = ymax - ymin;
  double margin = 0.05 * std::max({w, h, 1e-12});
  double vw = w + 2 * margin, vh = h + 2 * margin;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << format_g17(xmin - margin) << ' ' << format_g17(ymin - margin) << ' ' << format_g17(vw)
      << ' ' << format_g17(vh) << "\">\n";
  out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << format_g17(0.003 * std::max(vw, vh))
      << "\" d=\"M";
  for (size_t j = 0; j < pts.size(); ++j) {
    out << (j == 0 ? " " : " L ") << format_g17(pts[j].real()) << ' ' << format_g17(-pts[j].imag());
  }
  out << " Z\"/>\n</svg>\n";
  return bool(out);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"shifted hypergeometric function classifier and verifier"};
  app.require_subcommand(1);

  detail::TripleFlags cf, vf, rf;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  auto* classify = app.add_subcommand("classify", "evaluate the symbolic criteria for one triple");
  detail::add_triple_flags(classify, cf, true);
  classify->add_option("--alpha", alpha, "strong starlikeness order in (1/3, 1)");

  int grid_angular = 4096, grid_refine = 3;
  double radius_max = 0.9999;
  std::string dump_h;
  auto* verify = app.add_subcommand("verify", "cross-check the criteria against a disk scan");
  detail::add_triple_flags(verify, vf, true);
  verify->add_option("--grid-angular", grid_angular, "angular sample count (default 4096)");
  verify->add_option("--grid-refine", grid_refine, "refinement rounds (default 3)");
  verify->add_option("--radius-max", radius_max, "largest interior radius (default 0.9999)");
  verify->add_option("--dump-h", dump_h, "also write grid samples of h as CSV (theta,r,re,im)");

  double render_r = 0.999;
  long render_n = 4096;
  std::string render_out;
  auto* render = app.add_subcommand("render", "export the image curve of f on a circle");
  detail::add_triple_flags(render, rf, false);
  render->add_option("--r", render_r, "circle radius in (0, 1), default 0.999");
  render->add_option("--n", render_n, "sample count, default 4096");
  render->add_option("--out", render_out, "output path (.csv or .svg)")->required();

  std::string sweep_config;
  auto* sweep = app.add_subcommand("sweep", "run the classifier over a parameter lattice");
  sweep->add_option("--config", sweep_config, "flat key-value config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) {
      auto triple = cf.parse(err);
      auto lambda = cf.effective_lambda(err);
      if (!triple || !lambda) return 2;
      std::optional<double> al;
      if (!std::isnan(alpha)) al = alpha;
      json doc = report_envelope(json{{"command", "classify"},
                                      {"triple", triple_json(*triple)},
                                      {"lambda", *lambda}},
                                 iso_timestamp());
      doc["report"] = classification_json(*triple, *lambda, al);
      out << doc.dump(2) << '\n';
      return 0;
    }

    if (verify->parsed()) {
      auto triple = vf.parse(err);
      auto lambda = vf.effective_lambda(err);
      if (!triple || !lambda) return 2;
      SampleGrid grid = SampleGrid::standard();
      grid.angular_count = grid_angular;
      grid.refine_steps = grid_refine;
      if (!(radius_max > 0.0 && radius_max < 1.0)) {
        err << "error: --radius-max must lie in (0, 1)\n";
        return 2;
      }
      std::erase_if(grid.radii, [&](double r) { return r > radius_max; });
      if (grid.radii.empty() || grid.radii.back() < radius_max) grid.radii.push_back(radius_max);
      json doc;
      try {
        ConsistencyReport rep = consistency_report(*triple, *lambda, grid);
        doc = report_envelope(json{{"command", "verify"},
                                   {"triple", triple_json(*triple)},
                                   {"lambda", *lambda},
                                   {"grid_angular", grid_angular},
                                   {"grid_refine", grid_refine},
                                   {"radius_max", radius_max}},
                              iso_timestamp());
        doc["report"] = consistency_json(rep);
      } catch (const invalid_c_error&) {
        throw;
      } catch (const error& e) {
        err << "error: kernel cannot evaluate on the required region: " << e.what() << '\n';
        return 4;
      }
      if (!dump_h.empty()) {
        std::ofstream hf(dump_h);
        if (!hf) {
          err << "error: cannot open " << dump_h << " for writing\n";
          return 5;
        }
        hf << "theta,r,re_h,im_h\r\n";
        for (const QuotientRow& row : quotient_rows(*triple, grid)) {
          if (row.pole) continue;
          hf << format_g17(row.theta) << ',' << format_g17(row.r) << ','
             << format_g17(row.h.real()) << ',' << format_g17(row.h.imag()) << "\r\n";
        }
        hf.flush();
        if (!hf) return 5;
      }
      out << doc.dump(2) << '\n';
      return 0;
    }

    if (render->parsed()) {
      auto triple = rf.parse(err);
      if (!triple) return 2;
      bool csv = render_out.size() > 4 && render_out.ends_with(".csv");
      bool svg = render_out.size() > 4 && render_out.ends_with(".svg");
      if (!csv && !svg) {
        err << "error: --out must end in .csv or .svg\n";
        return 2;
      }
      if (!(render_r > 0.0 && render_r < 1.0) || render_n <= 0) {
        err << "error: need 0 < r < 1 and n > 0\n";
        return 2;
      }
      std::vector<cplx> pts = boundary_image(*triple, render_r, render_n);
      std::ofstream f(render_out);
      if (!f) {
        err << "error: cannot open " << render_out << " for writing\n";
        return 5;
      }
      if (csv) {
        f << "theta,re,im\r\n";
        for (long j = 0; j < render_n; ++j) {
          double theta = 2.0 * num::pi * double(j) / double(render_n);
          f << format_g17(theta) << ',' << format_g17(pts[size_t(j)].real()) << ','
            << format_g17(pts[size_t(j)].imag()) << "\r\n";
        }
      } else {
        detail::write_svg(f, pts);
      }
      f.flush();
      if (!f) {
        err << "error: write failed for " << render_out << '\n';
        return 5;
      }
      return 0;
    }

    if (sweep->parsed()) {
      std::ifstream cfg_in(sweep_config);
      if (!cfg_in) {
        err << "error: cannot read config " << sweep_config << '\n';
        return 2;
      }
      SweepConfig cfg;
      try {
        cfg = parse_sweep_config(cfg_in);
      } catch (const config_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
      SweepResult result;
      try {
        result = run_sweep(cfg);
      } catch (const config_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
      json doc = report_envelope(json{{"command", "sweep"}, {"config_path", sweep_config}},
                                 iso_timestamp());
      doc["records"] = result.records;
      json counts = json::object();
      for (const auto& [k, v] : result.status_counts) counts[k] = v;
      doc["summary"] = json{{"points", result.records.size()},
                            {"contradictions", result.contradictions},
                            {"status_counts", counts}};
      std::ofstream jf(cfg.output);
      if (!jf) {
        err << "error: cannot open " << cfg.output << " for writing\n";
        return 5;
      }
      jf << doc.dump(2) << '\n';
      jf.flush();
      if (!jf) return 5;

      std::string csv_path = cfg.output;
      if (csv_path.ends_with(".json")) csv_path.resize(csv_path.size() - 5);
      csv_path += ".csv";
      std::ofstream cf_out(csv_path);
      if (!cf_out) {
        err << "error: cannot open " << csv_path << " for writing\n";
        return 5;
      }
      cf_out << "index,a,b,c,lambda,necessary,necessary_margin,sufficient,sufficient_margin,"
                "min_weighted_real,ring_min,pole_suspected,contradictions\r\n";
      for (size_t i = 0; i < result.records.size(); ++i) {
        const json& rec = result.records[i];
        cf_out << i << ',';
        if (rec.contains("error")) {
          cf_out << detail::csv_field(rec["triple"]["a"].get<std::string>()) << ','
                 << detail::csv_field(rec["triple"]["b"].get<std::string>()) << ','
                 << detail::csv_field(rec["triple"]["c"].get<std::string>()) << ','
                 << format_g17(rec["lambda"].get<double>()) << ",error,,,,,,,\r\n";
          continue;
        }
        cf_out << detail::csv_field(rec["triple"]["a"].get<std::string>()) << ','
               << detail::csv_field(rec["triple"]["b"].get<std::string>()) << ','
               << detail::csv_field(rec["triple"]["c"].get<std::string>()) << ','
               << format_g17(rec["lambda"].get<double>()) << ','
               << rec["necessary"]["status"].get<std::string>() << ','
               << format_g17(rec["necessary"]["margin"].get<double>()) << ','
               << rec["sufficient"]["status"].get<std::string>() << ','
               << (rec["sufficient"].contains("margin")
                       ? format_g17(rec["sufficient"]["margin"].get<double>())
                       : std::string())
               << ',' << format_g17(rec["min_weighted_real"]["extremal_value"].get<double>())
               << ',' << format_g17(rec["ring_min_0.9999"].get<double>()) << ','
               << (rec["min_weighted_real"]["pole_suspected"].get<bool>() ? "1" : "0") << ','
               << rec["contradictions"].size() << "\r\n";
      }
      cf_out.flush();
      if (!cf_out) return 5;

      out << doc["summary"].dump(2) << '\n';
      return result.contradictions > 0 ? 6 : 0;
    }
  } catch (const invalid_c_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

}  // namespace hgft::app
