// simulate.hpp — continuous-time jump chain of the variable-speed walk, with
// truncation-escape as the Monte Carlo counterpart of the Dirichlet mass.
#pragma once

#include "radheat/family.hpp"

#include <cstdint>
#include <vector>

namespace radheat {

// Jump rates per radius up to the absorbing truncation r_sim. Lateral edges
// matter here (they burn jumps without moving the radius), so m0 is included;
// decorated trees add the pendant-excursion channel.
struct SimTables {
  long r_sim = 0;
  std::vector<double> out, in, flat, pend, total;
};
SimTables sim_tables(const GraphFamily& g, long r_sim);

struct PathOutcome {
  bool survived = false;  // clock passed the horizon strictly inside the ball
  double clock = 0.0;     // escape time, or the horizon when survived
  long jumps = 0;
};

struct TraceRow {
  long jump = 0;
  double clock = 0.0;
  long r = 0;
  bool pendant = false;
};

// One path from the root: wait Exp(total(r)), then jump outward / inward /
// laterally / onto a pendant end with probabilities proportional to the
// rates. Crossing into radius r_sim is an escape (counted as explosion).
// Fully deterministic in `seed`.
PathOutcome simulate_path(const SimTables& tables, double horizon, std::uint64_t seed,
                          std::vector<TraceRow>* trace = nullptr);

struct SurvivalEstimate {
  double horizon = 0.0;
  long paths = 0;
  long survivors = 0;
  long escapes = 0;
  double estimate = 0.0;  // survivors / paths, unbiased for M_{r_sim}(horizon)
  double ci_low = 0.0;    // Wilson 95% interval
  double ci_high = 0.0;
  long r_sim = 0;
  std::uint64_t seed_base = 0;
};

// Path i uses seed seed_base + i, so runs with different horizons but equal
// seeds share their randomness path by path.
SurvivalEstimate estimate_survival(const GraphFamily& g, double horizon, long paths, long r_sim,
                                   std::uint64_t seed_base);

}  // namespace radheat
