#pragma once

// CSV and JSON artifacts. Rationals are written exactly, doubles with 12
// significant digits, rows in key order.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jrl/conductor/bounds.hpp"
#include "jrl/conductor/kodaira.hpp"
#include "jrl/fibration/average_trace.hpp"
#include "jrl/nagao/estimate.hpp"
#include "jrl/towers/cover.hpp"
#include "jrl/towers/orbits.hpp"
#include "jrl/towers/tower.hpp"

namespace jrl::io {

using json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Doubles rounded through format_double so JSON matches CSV.
inline json number(double x) {
  if (std::isnan(x)) return nullptr;
  return std::stod(format_double(x));
}

inline std::string rational_text(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

inline void write_trace_csv(std::ostream& out, const std::vector<fibration::TraceSample>& samples) {
  out << "p,A_p_num,A_p_den,Ap_good_num,Ap_good_den,Astar_num,Astar_den,n_base,n_bad\n";
  for (const auto& s : samples) {
    out << s.p << ',' << s.avg_trace.get_num().get_str() << ',' << s.avg_trace.get_den().get_str() << ','
        << s.avg_trace_good.get_num().get_str() << ',' << s.avg_trace_good.get_den().get_str() << ','
        << s.reduced.get_num().get_str() << ',' << s.reduced.get_den().get_str() << ',' << s.n_base_points << ','
        << s.n_bad_fibers << '\n';
  }
}

inline void write_tower_csv(std::ostream& out, const std::vector<towers::TowerRow>& rows) {
  out << "n,d_n,f_n,bound,bound_over_logf,running_avg,kappa_n\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.d_n << ',' << r.f_n.get_str() << ',' << r.bound.get_str() << ','
        << format_double(r.bound_over_logf) << ',' << format_double(r.running_avg) << ','
        << (r.kappa_n ? format_double(*r.kappa_n) : "") << '\n';
  }
}

inline json conductor_json(const fibration::SurfaceSpec& spec, const conductor::ConductorReport& r) {
  json places = json::array();
  for (const auto& d : r.data) {
    json p;
    p["place"] = d.place.label();
    p["degree"] = d.place.degree();
    p["kodaira"] = d.kodaira_label.empty() ? json(nullptr) : json(d.kodaira_label);
    p["v_delta"] = d.v_delta_min ? json(*d.v_delta_min) : json(nullptr);
    p["epsilon"] = d.epsilon;
    if (!d.place.proven_irreducible) p["proven_irreducible"] = false;
    places.push_back(std::move(p));
  }
  json totals;
  totals["f"] = r.f;
  totals["s"] = r.s;
  totals["geometric_bound"] =
      conductor::geometric_bound(spec.genus_fiber, spec.base_genus(), r.f, spec.dim_trace);
  if (!r.supplied) totals["sum_v_delta"] = r.total_v_delta;
  json out;
  out["surface"] = spec.name;
  out["source"] = r.supplied ? "supplied" : "computed";
  out["places"] = std::move(places);
  out["totals"] = std::move(totals);
  return out;
}

inline json estimate_json(const nagao::RankEstimate& e) {
  json out;
  out["estimator"] = nagao::to_string(e.estimator);
  out["raw"] = number(e.raw);
  out["rounded"] = e.rounded;
  out["gap"] = number(e.gap);
  out["target"] = e.target;
  out["shrinking_from"] = number(e.shrinking_from);
  json cps = json::array();
  for (const auto& c : e.checkpoints) cps.push_back({{"x", number(c.x)}, {"value", number(c.value)}});
  out["checkpoints"] = std::move(cps);
  return out;
}

inline json trace_bound_json(const fibration::SurfaceSpec& spec, const fibration::TraceBoundReport& r,
                             const std::vector<fibration::TraceSample>& samples) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    rows.push_back({{"p", r.rows[i].p},
                    {"A_p", rational_text(samples[i].avg_trace)},
                    {"excess", number(r.rows[i].excess)},
                    {"running_max", number(r.rows[i].running_max)}});
  }
  json out;
  out["surface"] = spec.name;
  out["G"] = r.bound;
  out["max_excess"] = number(r.max_excess);
  out["argmax"] = r.argmax;
  out["max_before_top_decade"] = number(r.max_before_top_decade);
  out["stable"] = r.stable;
  out["rows"] = std::move(rows);
  return out;
}

inline json cover_json(const towers::CoverReport& r) {
  return {{"p", r.p},
          {"n", r.n},
          {"points", r.n_points},
          {"kernel", r.kernel},
          {"image", r.image},
          {"group_order", r.group_order},
          {"kernel_image", r.kernel_image_ok},
          {"preimages", r.preimages_ok},
          {"trace_identity", r.trace_identity_ok},
          {"pulled_back_sum", r.pulled_back_sum},
          {"image_sum", r.image_sum},
          {"pulled_back_average", rational_text(r.pulled_back_average)},
          {"predicted_average", rational_text(r.predicted_average)}};
}

inline json orbit_json(const towers::OrbitResult& r) {
  json out{{"n", r.n}, {"rank", r.m}, {"count", r.count}, {"method", towers::to_string(r.method)}};
  if (r.group_order > 0) out["group_order"] = r.group_order;
  if (r.validation_samples > 0) out["validation_samples"] = r.validation_samples;
  return out;
}

/// Enough to rerun a command; outputs are reproducible from it.
struct RunManifest {
  std::string command;
  json config = json::object();
  std::vector<std::string> outputs;
  double wall_seconds = 0;

  json to_json() const {
    json v{{"jrl", JRL_VERSION}, {"gmp", gmp_version}, {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) +
                                                                                "." +
                                                                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                                                                                "." +
                                                                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
    return {{"command", command},
            {"config", config},
            {"versions", v},
            {"wall_seconds", wall_seconds},
            {"outputs", outputs}};
  }
};

}  // namespace jrl::io
