// simulate.cpp — exponential-clock jump chain with truncation escape.
#include "radheat/simulate.hpp"

#include "radheat/profile.hpp"

#include <cmath>
#include <random>

namespace radheat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

SimTables sim_tables(const GraphFamily& g, long r_sim) {
  if (r_sim < 1) throw std::domain_error("sim_tables: r_sim must be >= 1");
  SimTables t;
  t.r_sim = r_sim;
  const size_t n = static_cast<size_t>(r_sim);
  t.out.assign(n, 0.0);
  t.in.assign(n, 0.0);
  t.flat.assign(n, 0.0);
  t.pend.assign(n, 0.0);

  if (const auto* dt = std::get_if<DecoratedTree>(&g)) {
    for (long r = 0; r < r_sim; ++r) {
      const double kr = dt->k.value(r);
      if (!(kr >= 1.0)) throw InconsistentProfile(r, "forward degree k(r) must be >= 1");
      t.out[static_cast<size_t>(r)] = kr;
      t.in[static_cast<size_t>(r)] = r > 0 ? 1.0 : 0.0;
      t.pend[static_cast<size_t>(r)] = dt->k_tilde.value(r);
    }
  } else if (const auto* wp = std::get_if<WeightedPath>(&g)) {
    double prev = 0.0;
    for (long r = 0; r < r_sim; ++r) {
      const double ar = wp->weight.value(r);
      if (!(ar > 0.0)) throw InconsistentProfile(r, "path weight a(r) must be positive");
      t.out[static_cast<size_t>(r)] = ar;
      t.in[static_cast<size_t>(r)] = prev;
      prev = ar;
    }
  } else {
    const RadialProfile p = lower_to_profile(g);
    const RateTable rt = rates(p, r_sim - 1, /*with_m_zero=*/true);
    for (long r = 0; r < r_sim; ++r) {
      const size_t i = static_cast<size_t>(r);
      t.out[i] = rt.k_plus[i];
      t.in[i] = rt.k_minus[i];
      t.flat[i] = rt.m_zero[i];
    }
  }

  t.total.resize(n);
  for (size_t i = 0; i < n; ++i) t.total[i] = t.out[i] + t.in[i] + t.flat[i] + t.pend[i];
  return t;
}

PathOutcome simulate_path(const SimTables& tables, double horizon, std::uint64_t seed,
                          std::vector<TraceRow>* trace) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw std::domain_error("simulate_path: horizon must be finite and >= 0");
  std::mt19937_64 eng(splitmix64(seed));

  long r = 0;
  bool on_pendant = false;
  double clock = 0.0;
  long jumps = 0;

  while (true) {
    const double rate = on_pendant ? 1.0 : tables.total[static_cast<size_t>(r)];
    const double wait = -std::log1p(-u01(eng)) / rate;
    if (clock + wait > horizon) return PathOutcome{true, horizon, jumps};
    clock += wait;
    ++jumps;

    if (on_pendant) {
      on_pendant = false;  // the only neighbour of an end is its parent
    } else {
      const size_t i = static_cast<size_t>(r);
      const double x = u01(eng) * tables.total[i];
      if (x < tables.out[i]) {
        if (++r == tables.r_sim) return PathOutcome{false, clock, jumps};
      } else if (x < tables.out[i] + tables.in[i]) {
        --r;
      } else if (x < tables.out[i] + tables.in[i] + tables.flat[i]) {
        // lateral: the radius is unchanged
      } else {
        // pendant ends of a parent at radius r sit at radius r+1
        if (r + 1 == tables.r_sim) return PathOutcome{false, clock, jumps};
        on_pendant = true;
      }
    }
    if (trace) trace->push_back(TraceRow{jumps, clock, r, on_pendant});
  }
}

SurvivalEstimate estimate_survival(const GraphFamily& g, double horizon, long paths, long r_sim,
                                   std::uint64_t seed_base) {
  if (paths < 1) throw std::domain_error("estimate_survival: need at least one path");
  const SimTables tables = sim_tables(g, r_sim);

  SurvivalEstimate est;
  est.horizon = horizon;
  est.paths = paths;
  est.r_sim = r_sim;
  est.seed_base = seed_base;
  for (long i = 0; i < paths; ++i)
    if (simulate_path(tables, horizon, seed_base + static_cast<std::uint64_t>(i)).survived)
      ++est.survivors;
  est.escapes = paths - est.survivors;
  est.estimate = static_cast<double>(est.survivors) / static_cast<double>(paths);

  const double z = 1.959963984540054;  // two-sided 95%
  const double n = static_cast<double>(paths);
  const double ph = est.estimate;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (ph + 0.5 * z2n) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2n / (4.0 * n)) / denom;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

}  // namespace radheat
