// ball.hpp — explicit finite balls of a family, for audits and dense oracles.
#pragma once

#include "radheat/family.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace radheat {

// Vertices are numbered radius-major; inside one radius class the base-graph
// vertices come first, then (decorated trees) pendant ends ordered by parent.
// Construction is fully deterministic: repeated calls yield identical balls.
struct FiniteBall {
  long radius = 0;
  std::vector<long> sphere_start;          // size radius+2, prefix offsets
  std::vector<int> vertex_radius;          // distance from the root
  std::vector<std::uint8_t> is_decoration; // pendant end vertices
  std::vector<std::pair<long, long>> edges;  // (a,b) with a < b
  std::vector<double> edge_weight;           // 1.0 except weighted paths
  std::vector<long> degree;

  long vertex_count() const { return static_cast<long>(vertex_radius.size()); }
  long sphere_size(long r) const { return sphere_start[r + 1] - sphere_start[r]; }
  bool is_boundary(long v) const { return vertex_radius[v] == radius; }
  long interior_count() const { return sphere_start[radius]; }
};

struct BallCaps {
  long max_vertices = 2'000'000;
  long max_edges = 8'000'000;
};

// Throws Unrealizable when the profile admits no simple graph at some radius
// (k+(r) > S(r+1), lateral degree >= S(r), or odd m0(r)·S(r)), CapExceeded
// when the requested ball is too large to materialize.
FiniteBall materialize_ball(const GraphFamily& g, long radius, const BallCaps& caps = {});

}  // namespace radheat
