#ifndef NORMGAP_JSON_HPP
#define NORMGAP_JSON_HPP

// JSON encodings of the report types (nlohmann/json ADL hooks).

#include <json.hpp>
#include <optional>
#include <string>

#include "normgap/extremal.hpp"
#include "normgap/gapbound.hpp"
#include "normgap/oracle.hpp"
#include "normgap/solver.hpp"

namespace normgap {

inline void to_json(nlohmann::json& j, const GapReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"p", r.p},
                     {"q", r.q},
                     {"lhs_norm_q", r.lhs_norm_q},
                     {"scaled_norm_p", r.scaled_norm_p},
                     {"gap", r.gap},
                     {"bound", r.bound},
                     {"slack", r.slack},
                     {"range", r.range},
                     {"equality_first", r.equality_first},
                     {"equality_second", r.equality_second},
                     {"m_star", r.m_star},
                     {"verified", r.verified}};
  j["warning"] = r.warning ? nlohmann::json(*r.warning) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, GapReport& r) {
  j.at("n").get_to(r.n);
  j.at("p").get_to(r.p);
  j.at("q").get_to(r.q);
  j.at("lhs_norm_q").get_to(r.lhs_norm_q);
  j.at("scaled_norm_p").get_to(r.scaled_norm_p);
  j.at("gap").get_to(r.gap);
  j.at("bound").get_to(r.bound);
  j.at("slack").get_to(r.slack);
  j.at("range").get_to(r.range);
  j.at("equality_first").get_to(r.equality_first);
  j.at("equality_second").get_to(r.equality_second);
  j.at("m_star").get_to(r.m_star);
  j.at("verified").get_to(r.verified);
  if (auto it = j.find("warning"); it != j.end() && !it->is_null()) {
    r.warning = it->get<std::string>();
  } else {
    r.warning.reset();
  }
}

inline void to_json(nlohmann::json& j, const ExtremalConfig& c) {
  j = nlohmann::json{{"n", c.n}, {"k", c.k}, {"high", c.high}, {"low", c.low}};
}

inline void from_json(const nlohmann::json& j, ExtremalConfig& c) {
  j.at("n").get_to(c.n);
  j.at("k").get_to(c.k);
  j.at("high").get_to(c.high);
  j.at("low").get_to(c.low);
}

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"trial", v.trial}, {"vector", v.vector}, {"report", v.report}};
}

inline void to_json(nlohmann::json& j, const AdversarialReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"p", r.p},
                     {"q", r.q},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"violations", r.violations},
                     {"worst_normalized_slack", r.worst_normalized_slack},
                     {"worst_normalized_gap", r.worst_normalized_gap},
                     {"worst_trial", r.worst_trial},
                     {"worst_vector", r.worst_vector},
                     {"worst_report", r.worst_report},
                     {"evidence", r.evidence}};
}

inline void to_json(nlohmann::json& j, const SolveResult& r) {
  j = nlohmann::json{{"solution", r.solution.values()},
                     {"iterations", r.iterations},
                     {"converged", r.converged},
                     {"objective_trace", r.objective_trace},
                     {"lp_trace", r.lp_trace},
                     {"eps_trace", r.eps_trace},
                     {"final_residual", r.final_residual},
                     {"diagnostic_iterations", r.diagnostic_iterations},
                     {"gap_diagnostics", r.gap_diagnostics}};
}

}  // namespace normgap

#endif  // NORMGAP_JSON_HPP
