// report.hpp — deterministic JSON/CSV emission of results.
#pragma once

#include "radheat/classify.hpp"
#include "radheat/config.hpp"
#include "radheat/harmonic.hpp"
#include "radheat/heat.hpp"
#include "radheat/simulate.hpp"

#include <ostream>
#include <string>

namespace radheat {

Json verdict_to_json(const Verdict& v);
Json solution_to_json(const RadialSolution& s, const BoundednessReport& probe);
Json survival_to_json(const SurvivalEstimate& e);
Json comparison_to_json(const ComparisonReport& r, double tolerance);
Json mass_diagnostics_json(const MassCurve& c);

// "# radheat mass-curve csv v1" header, columns R,t,mass, then the
// diagnostics block as a trailing comment line.
void write_mass_curve_csv(std::ostream& os, const MassCurve& c);

// "# radheat path-trace csv v1" header, columns path,jump,clock,r,pendant.
void write_trace_csv(std::ostream& os, const std::vector<std::vector<TraceRow>>& traces);

std::string format_double(double v);  // shortest round-trip, locale-free

}  // namespace radheat
