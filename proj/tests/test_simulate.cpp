// test_simulate.cpp — jump tables, path determinism, trace mechanics, the
// Wilson interval, and concordance with the Dirichlet mass on small runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "radheat/heat.hpp"
#include "radheat/simulate.hpp"

#include <cmath>
#include <set>

using namespace radheat;
using namespace radheat::testing;

TEST_CASE("jump tables of the plain families") {
  const SimTables bt = sim_tables(GraphFamily{binary_tree()}, 4);
  REQUIRE(bt.r_sim == 4);
  REQUIRE(bt.out.size() == 4);
  CHECK(bt.out[0] == 2.0);
  CHECK(bt.in[0] == 0.0);
  CHECK(bt.in[1] == 1.0);
  CHECK(bt.flat[2] == 0.0);
  CHECK(bt.pend[2] == 0.0);
  CHECK(bt.total[3] == 3.0);

  // antitree S=(r+1)^2: consecutive spheres fully joined, none inside
  const SimTables at = sim_tables(GraphFamily{quadratic_antitree()}, 4);
  CHECK(at.out[1] == 9.0);   // k+(1) = S(2)
  CHECK(at.in[1] == 1.0);    // k-(1) = S(0)
  CHECK(at.flat[1] == 0.0);
  CHECK(at.total[1] == 10.0);

  const SimTables dt = sim_tables(GraphFamily{decorated_ql()}, 4);
  CHECK(dt.out[2] == 9.0);   // k(2)
  CHECK(dt.in[2] == 1.0);
  CHECK(dt.pend[2] == 3.0);  // k~(2)
  CHECK(dt.total[2] == 13.0);

  const SimTables wp = sim_tables(GraphFamily{cubic_path()}, 4);
  CHECK(wp.out[2] == 27.0);  // a(2)
  CHECK(wp.in[2] == 8.0);    // a(1)
  CHECK(wp.total[0] == 1.0);
}

TEST_CASE("identical seeds give identical paths, different seeds differ") {
  const SimTables t = sim_tables(GraphFamily{quadratic_tree()}, 50);
  const PathOutcome a = simulate_path(t, 1.0, 42);
  const PathOutcome b = simulate_path(t, 1.0, 42);
  CHECK(a.survived == b.survived);
  CHECK(a.clock == b.clock);  // bitwise
  CHECK(a.jumps == b.jumps);

  std::set<long> jump_counts;
  for (std::uint64_t s = 0; s < 32; ++s) jump_counts.insert(simulate_path(t, 1.0, s).jumps);
  CHECK(jump_counts.size() >= 10);  // seeds decorrelate (survivors share the clock)
}

TEST_CASE("trace records the walk consistently") {
  // one row per executed jump; the escape jump itself returns without a row
  const SimTables t = sim_tables(GraphFamily{decorated_ql()}, 30);
  std::vector<TraceRow> trace;
  const PathOutcome out = simulate_path(t, 2.0, 7, &trace);
  REQUIRE(!trace.empty());
  long prev_r = 0;           // the walk starts at the root
  bool prev_pendant = false;
  double prev_clock = 0.0;
  for (size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].jump == static_cast<long>(i) + 1);
    CHECK(trace[i].clock > prev_clock);
    CHECK(trace[i].r >= 0);
    CHECK(trace[i].r < t.r_sim);
    if (trace[i].pendant) {
      CHECK(trace[i].r == prev_r);  // excursion keeps the radius
      CHECK(!prev_pendant);         // no pendant-to-pendant moves
    } else if (prev_pendant) {
      CHECK(trace[i].r == prev_r);  // the only way back is to the parent
    } else {
      CHECK(std::abs(trace[i].r - prev_r) == 1);  // radial move
    }
    prev_r = trace[i].r;
    prev_pendant = trace[i].pendant;
    prev_clock = trace[i].clock;
  }
  if (out.survived) {
    CHECK(out.clock == 2.0);
    CHECK(out.jumps == static_cast<long>(trace.size()));
  } else {
    CHECK(out.jumps == static_cast<long>(trace.size()) + 1);
    CHECK(out.clock > trace.back().clock);
  }
}

TEST_CASE("lateral moves appear only with a lateral rule") {
  // same radial skeleton, with and without intra-sphere edges
  const SimTables bare = sim_tables(GraphFamily{CustomRadial{cubic_profile_with_lateral(false)}}, 20);
  const SimTables full = sim_tables(GraphFamily{CustomRadial{cubic_profile_with_lateral(true)}}, 20);
  CHECK(bare.flat[2] == 0.0);
  CHECK(full.flat[2] == 26.0);  // S(2) - 1 = 27 - 1
  CHECK(bare.out[2] == full.out[2]);
  CHECK(bare.in[2] == full.in[2]);
  // the lateral channel slows the clock without changing the radial law
  CHECK(full.total[2] == bare.total[2] + 26.0);
}

TEST_CASE("escape is certain on an explosive family once the horizon is long") {
  // cubic antitree explodes almost surely; at horizon 10 and a tight ball the
  // escape fraction must be overwhelming
  const SurvivalEstimate e = estimate_survival(GraphFamily{cubic_antitree()}, 10.0, 2000, 40, 1);
  CHECK(e.paths == 2000);
  CHECK(e.survivors + e.escapes == 2000);
  CHECK(e.estimate < 0.01);
  CHECK(e.r_sim == 40);
  CHECK(e.seed_base == 1);
  CHECK(e.horizon == 10.0);
}

TEST_CASE("Wilson interval brackets the point estimate properly") {
  const SurvivalEstimate e = estimate_survival(GraphFamily{quadratic_tree()}, 1.0, 4000, 60, 9);
  CHECK(e.estimate == doctest::Approx(double(e.survivors) / e.paths));
  CHECK(e.ci_low < e.estimate);
  CHECK(e.estimate < e.ci_high);
  CHECK(e.ci_low > 0.0);
  CHECK(e.ci_high < 1.0);
  // hand Wilson check at z = 1.959963984540054
  const double z = 1.959963984540054;
  const double n = e.paths, p = e.estimate;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  CHECK(e.ci_low == doctest::Approx(centre - half).epsilon(1e-12));
  CHECK(e.ci_high == doctest::Approx(centre + half).epsilon(1e-12));
}

TEST_CASE("estimates are reproducible and respond to the seed base") {
  const GraphFamily g{quadratic_tree()};
  const SurvivalEstimate a = estimate_survival(g, 0.5, 1000, 50, 77);
  const SurvivalEstimate b = estimate_survival(g, 0.5, 1000, 50, 77);
  CHECK(a.survivors == b.survivors);
  CHECK(a.estimate == b.estimate);  // bitwise

  // path i draws from seed_base + i, so disjoint windows decorrelate fully
  const SimTables t = sim_tables(g, 50);
  std::vector<long> w1, w2;
  for (std::uint64_t s = 0; s < 100; ++s) {
    w1.push_back(simulate_path(t, 0.5, 77 + s).jumps);
    w2.push_back(simulate_path(t, 0.5, 1'000'077 + s).jumps);
  }
  CHECK(w1 != w2);
}

TEST_CASE("shared seeds nest the horizons path by path") {
  // survival at a shorter horizon = survival at the longer one, or an escape
  // clock past the shorter horizon; with shared seeds this holds pathwise
  const SimTables t = sim_tables(GraphFamily{cubic_antitree()}, 60);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const PathOutcome longr = simulate_path(t, 1.0, s);
    const PathOutcome shortr = simulate_path(t, 0.5, s);
    const bool derived = longr.survived || longr.clock > 0.5;
    CHECK(shortr.survived == derived);
  }
}

TEST_CASE("monte carlo concords with the dirichlet mass on a small ball") {
  const GraphFamily g{binary_tree()};
  const long r_sim = 12;
  const std::vector<double> m = mass_at_radius(g, r_sim, {1.0}, Solver::Uniformization, {});
  const SurvivalEstimate e = estimate_survival(g, 1.0, 20000, r_sim, 3);
  const double sigma = std::sqrt(m[0] * (1.0 - m[0]) / e.paths);
  CHECK(std::abs(e.estimate - m[0]) < 3.0 * sigma);
  CHECK(e.ci_low < m[0]);
  CHECK(m[0] < e.ci_high);
}

TEST_CASE("pendant excursions slow escape on decorated trees") {
  // matched outward rates: the decorated tree dawdles on its ends, so its
  // survival dominates the plain tree with the same k
  const SurvivalEstimate plain =
      estimate_survival(GraphFamily{SymmetricTree{SequenceSpec::polynomial(2)}}, 1.0, 4000, 30, 5);
  const SurvivalEstimate dec = estimate_survival(GraphFamily{decorated_ql()}, 1.0, 4000, 30, 5);
  CHECK(dec.estimate > plain.estimate);
}
