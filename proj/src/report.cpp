// report.cpp — JSON/CSV emission; all floating output is locale-free and
// shortest-round-trip so identical runs are byte-identical.
#include "radheat/report.hpp"

#include <charconv>

namespace radheat {

namespace {

Json real_array(const VecR& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(static_cast<double>(v[i]));
  return arr;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"status", completeness_name(v.status)},
         {"test", v.test},
         {"exact", v.exact},
         {"detail", v.detail},
         {"horizon", v.horizon}};
  j["partialSums"] = v.partial_sums;
  return j;
}

Json solution_to_json(const RadialSolution& s, const BoundednessReport& probe) {
  Json j{{"lambda", static_cast<double>(s.lambda)},
         {"family", s.family},
         {"depth", s.depth()}};
  if (s.diverged_at)
    j["divergedAt"] = *s.diverged_at;
  else
    j["divergedAt"] = nullptr;
  j["boundedness"] = Json{{"result", boundedness_name(probe.result)},
                          {"supEstimate", static_cast<double>(probe.sup_estimate)},
                          {"growthRate", static_cast<double>(probe.growth_rate)},
                          {"note", probe.note}};
  j["w"] = real_array(s.w);
  j["increment"] = real_array(s.increment);
  j["incrementFloor"] = real_array(s.increment_floor);
  return j;
}

Json survival_to_json(const SurvivalEstimate& e) {
  return Json{{"horizon", e.horizon}, {"paths", e.paths},
              {"survivors", e.survivors}, {"escapes", e.escapes},
              {"estimate", e.estimate}, {"ciLow", e.ci_low},
              {"ciHigh", e.ci_high}, {"rSim", e.r_sim},
              {"seedBase", e.seed_base}};
}

Json comparison_to_json(const ComparisonReport& r, double tolerance) {
  const bool pass = r.tree_sphere_spread <= tolerance && r.graph_sphere_spread <= tolerance &&
                    r.cross_difference <= tolerance;
  return Json{{"radius", r.radius},
              {"t", r.t},
              {"interiorVertices", r.interior_vertices},
              {"treeSphereSpread", r.tree_sphere_spread},
              {"graphSphereSpread", r.graph_sphere_spread},
              {"crossDifference", r.cross_difference},
              {"tolerance", tolerance},
              {"pass", pass}};
}

Json mass_diagnostics_json(const MassCurve& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows)
    rows.push_back(Json{{"radius", row.radius}, {"mass", row.mass}, {"solver", row.solver},
                        {"work", row.work}});
  return Json{{"times", c.times},
              {"rows", rows},
              {"limitEstimate", c.limit_estimate},
              {"lastGap", c.last_gap},
              {"converged", c.converged},
              {"finalRadius", c.final_radius},
              {"doublingTol", c.doubling_tol}};
}

void write_mass_curve_csv(std::ostream& os, const MassCurve& c) {
  os << "# radheat mass-curve csv v1\n";
  os << "R,t,mass\n";
  for (const auto& row : c.rows)
    for (size_t i = 0; i < row.mass.size(); ++i)
      os << row.radius << ',' << format_double(c.times[i]) << ',' << format_double(row.mass[i]) << '\n';
  os << "# diagnostics: " << mass_diagnostics_json(c).dump() << '\n';
}

void write_trace_csv(std::ostream& os, const std::vector<std::vector<TraceRow>>& traces) {
  os << "# radheat path-trace csv v1\n";
  os << "path,jump,clock,r,pendant\n";
  for (size_t p = 0; p < traces.size(); ++p)
    for (const TraceRow& row : traces[p])
      os << p << ',' << row.jump << ',' << format_double(row.clock) << ',' << row.r << ','
         << (row.pendant ? 1 : 0) << '\n';
}

}  // namespace radheat
