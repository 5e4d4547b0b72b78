#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hgft/criteria.hpp"
#include "hgft/parse.hpp"
#include "hgft/types.hpp"
#include "hgft/verifier.hpp"

namespace hgft {

using json = nlohmann::json;

inline constexpr const char* report_schema = "hgft-report/1";
inline constexpr const char* tool_version = "0.1.0";

inline json triple_json(const ParamTriple& t) {
  return json{{"a", format_complex(t.a)}, {"b", format_complex(t.b)}, {"c", format_complex(t.c)}};
}

inline json verdict_json(const std::string& criterion, const Verdict& v) {
  return json{{"criterion", criterion},
              {"status", status_name(v.status)},
              {"margin", v.margin},
              {"diagnostics", v.diagnostics}};
}

inline json lmn_json(const QuadraticFormLMN& q) {
  return json{{"L", q.L}, {"M", q.M}, {"N", q.N}, {"LN_minus_M2", q.det()}};
}

inline json sample_report_json(const SampleReport& r) {
  return json{{"extremal_value", r.extremal_value},
              {"extremal_z", format_complex(r.extremal_z)},
              {"samples_evaluated", r.samples_evaluated},
              {"pole_suspected", r.pole_suspected},
              {"est_error", r.est_error}};
}

// Every applicable symbolic predicate for one triple.
inline json classification_json(const ParamTriple& p, double lambda,
                                std::optional<double> alpha) {
  json verdicts = json::array();

  NecessaryResult nec = necessary_spirallike(p, SpiralAngle(lambda));
  json nj = verdict_json(std::string("thm:nec case (") + necessary_case_name(nec.kase) + ")",
                         nec.verdict);
  if (nec.case2) {
    nj["w1"] = format_complex(nec.case2->w1);
    nj["R1"] = nec.case2->R1;
  }
  verdicts.push_back(nj);

  SufficiencyResult st = sufficient_starlike(p);
  json sj = verdict_json("thm:st", st.verdict);
  sj["quadratic_form"] = lmn_json(st.lmn);
  verdicts.push_back(sj);

  SufficiencyResult cv = sufficient_convex(p);
  json cj = verdict_json("thm:convex", cv.verdict);
  cj["quadratic_form"] = lmn_json(cv.lmn);
  verdicts.push_back(cj);

  const double scale = detail::magnitude_scale({p.a, p.b, p.c});
  if (lambda != 0.0) {
    if (std::abs(p.c - (p.a + p.b + 1.0)) <= 1e-9 * std::max(1.0, scale)) {
      SufficiencyResult sp = sufficient_spirallike(p.a, p.b, SpiralAngle(lambda));
      json j = verdict_json("thm:spl", sp.verdict);
      j["quadratic_form"] = lmn_json(sp.lmn);
      verdicts.push_back(j);
    } else {
      verdicts.push_back(verdict_json(
          "thm:spl", {VerdictStatus::NotApplicable, 0.0, "requires c = a + b + 1"}));
    }
    verdicts.push_back(verdict_json("cor:1", cor1_check(p.a, p.b, SpiralAngle(lambda))));
    verdicts.push_back(verdict_json("cor:2", cor2_check(p.a, p.b, SpiralAngle(lambda))));
  }

  if (alpha) {
    verdicts.push_back(verdict_json("thm:ss", strongly_starlike_check(p.a, p.b, *alpha)));
    if (std::abs(p.b - std::conj(p.a)) <= 1e-9 * std::max(1.0, scale) &&
        std::abs(p.c - (2.0 * p.a.real() + 1.0)) <= 1e-9 * std::max(1.0, scale)) {
      verdicts.push_back(
          verdict_json("cor:ss", cor_ss_ellipse(p.a.real(), p.a.imag(), *alpha)));
    }
  }

  verdicts.push_back(verdict_json("corB", corB_starlike(p)));
  verdicts.push_back(verdict_json("rem:ex", coefficient_bound_check(p)));

  json doc;
  doc["triple"] = triple_json(p);
  doc["lambda"] = lambda;
  if (alpha) doc["alpha"] = *alpha;
  doc["verdicts"] = verdicts;
  doc["bounded"] = boundedness(p);

  ThmASigmaResult sig = thmA_sigma(p);
  json tj;
  tj["case"] = thma_case_name(sig.kase);
  if (sig.kase != ThmACase::none) {
    tj["sigma"] = sig.sigma;
    tj["is_exact"] = sig.is_exact;
    if (sig.kase == ThmACase::i) tj["lower_bound"] = thmA_case_i_bound(p);
  }
  doc["thmA_sigma"] = tj;

  try {
    AnnulusBounds ab = cluster_annulus(p);
    doc["cluster_annulus"] = json{{"w0", format_complex(ab.w0)},
                                  {"R", ab.R},
                                  {"inner", ab.inner},
                                  {"outer", ab.outer}};
  } catch (const not_zero_imbalanced_error&) {
  }
  return doc;
}

inline json consistency_json(const ConsistencyReport& rep) {
  json doc;
  doc["triple"] = triple_json(rep.triple);
  doc["lambda"] = rep.lambda;
  doc["necessary"] = verdict_json(
      std::string("thm:nec case (") + necessary_case_name(rep.necessary.kase) + ")",
      rep.necessary.verdict);
  if (rep.sufficient) {
    json j = verdict_json(rep.sufficient_kind, rep.sufficient->verdict);
    j["quadratic_form"] = lmn_json(rep.sufficient->lmn);
    doc["sufficient"] = j;
  } else {
    doc["sufficient"] = json{{"criterion", "none"},
                             {"status", "NotApplicable"},
                             {"diagnostics", "no sufficiency criterion covers this family"}};
  }
  doc["corB"] = verdict_json("corB", rep.corB);
  doc["coefficient_bound"] = verdict_json("rem:ex", rep.coefficient_bound);
  doc["bounded"] = rep.bounded;
  doc["min_weighted_real"] = sample_report_json(rep.min_report);
  doc["ring_min_0.9999"] = rep.ring_min;
  json methods = json::object();
  for (int m = 0; m < 6; ++m) {
    if (rep.kernel.method_counts[m] > 0) {
      methods[method_name(static_cast<Method>(m))] = rep.kernel.method_counts[m];
    }
  }
  doc["kernel"] = json{{"methods", methods}, {"max_est_error", rep.kernel.max_est_error}};
  doc["contradictions"] = rep.contradictions;
  return doc;
}

// Common envelope: schema id, version, config echo and a timestamp (the one
// field excluded from byte-for-byte comparisons).
inline json report_envelope(json config_echo, std::string timestamp) {
  json doc;
  doc["schema"] = report_schema;
  doc["tool_version"] = tool_version;
  doc["generated_at"] = std::move(timestamp);
  doc["config"] = std::move(config_echo);
  return doc;
}

}  // namespace hgft
