// ball.cpp — deterministic construction of finite balls: block-cyclic
// inter-sphere wiring, circulant lateral edges, pendant ends by parent.
#include "radheat/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace radheat {

namespace {

long to_long_checked(const Count& c, long cap, const char* what, long r) {
  if (c > cap)
    throw CapExceeded(std::string(what) + " at r=" + std::to_string(r) + " exceeds the materialization cap (" +
                      c.str() + " > " + std::to_string(cap) + ")");
  return static_cast<long>(c.convert_to<long long>());
}

struct Builder {
  FiniteBall b;
  const BallCaps& caps;

  explicit Builder(long radius, const BallCaps& c) : caps(c) {
    b.radius = radius;
    b.sphere_start.assign(static_cast<size_t>(radius) + 2, 0);
  }

  void reserve_class(long r, long size) {
    const long total = b.sphere_start[static_cast<size_t>(r)] + size;
    if (total > caps.max_vertices)
      throw CapExceeded("ball vertex count exceeds cap " + std::to_string(caps.max_vertices) + " at r=" +
                        std::to_string(r));
    b.sphere_start[static_cast<size_t>(r) + 1] = total;
    b.vertex_radius.resize(static_cast<size_t>(total), static_cast<int>(r));
    b.is_decoration.resize(static_cast<size_t>(total), 0);
  }

  void add_edge(long a, long c, double w = 1.0) {
    if (static_cast<long>(b.edges.size()) >= caps.max_edges)
      throw CapExceeded("ball edge count exceeds cap " + std::to_string(caps.max_edges));
    if (a > c) std::swap(a, c);
    b.edges.emplace_back(a, c);
    b.edge_weight.push_back(w);
  }

  void finish_degrees() {
    b.degree.assign(b.vertex_radius.size(), 0);
    for (const auto& [a, c] : b.edges) {
      ++b.degree[static_cast<size_t>(a)];
      ++b.degree[static_cast<size_t>(c)];
    }
  }
};

FiniteBall build_profile_ball(const RadialProfile& p, long radius, const BallCaps& caps) {
  const ProfileTable t = tabulate(p, radius);
  Builder bld(radius, caps);

  std::vector<long> s(static_cast<size_t>(radius) + 1), kp(s.size()), m0(s.size());
  for (long r = 0; r <= radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    s[i] = to_long_checked(t.sphere[i], caps.max_vertices, "sphere size", r);
    kp[i] = to_long_checked(t.k_plus[i], caps.max_edges, "outward degree", r);
    m0[i] = to_long_checked(t.m_zero[i], caps.max_vertices, "lateral degree", r);
    bld.reserve_class(r, s[i]);
  }

  for (long r = 0; r < radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    if (kp[i] > s[i + 1])
      throw Unrealizable(r, "outward degree k+(r) exceeds S(r+1); no simple wiring exists");
    const long base = bld.b.sphere_start[i];
    const long next = bld.b.sphere_start[i + 1];
    for (long v = 0; v < s[i]; ++v)
      for (long j = 0; j < kp[i]; ++j) bld.add_edge(base + v, next + (v * kp[i] + j) % s[i + 1]);
  }

  for (long r = 1; r <= radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    if (m0[i] == 0) continue;
    if (m0[i] > s[i] - 1) throw Unrealizable(r, "lateral degree m0(r) exceeds S(r) - 1");
    if ((m0[i] * s[i]) % 2 != 0) throw Unrealizable(r, "m0(r) S(r) is odd, so no lateral edge set exists");
    const long base = bld.b.sphere_start[i];
    for (long d = 1; d <= m0[i] / 2; ++d)
      for (long v = 0; v < s[i]; ++v) bld.add_edge(base + v, base + (v + d) % s[i]);
    if (m0[i] % 2 != 0)
      for (long v = 0; v < s[i] / 2; ++v) bld.add_edge(base + v, base + v + s[i] / 2);
  }

  bld.finish_degrees();
  return std::move(bld.b);
}

FiniteBall build_decorated_ball(const DecoratedTree& g, long radius, const BallCaps& caps) {
  Builder bld(radius, caps);

  std::vector<long> s(static_cast<size_t>(radius) + 1), k(s.size()), kt(s.size());
  Count sphere = 1;
  for (long r = 0; r <= radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    s[i] = to_long_checked(sphere, caps.max_vertices, "sphere size", r);
    k[i] = to_long_checked(g.k.count(r), caps.max_edges, "forward degree", r);
    kt[i] = to_long_checked(g.k_tilde.count(r), caps.max_edges, "end count", r);
    if (k[i] < 1) throw InconsistentProfile(r, "forward degree k(r) must be >= 1");
    const long ends = r > 0 ? kt[i - 1] * s[i - 1] : 0;
    bld.reserve_class(r, s[i] + ends);
    for (long e = 0; e < ends; ++e)
      bld.b.is_decoration[static_cast<size_t>(bld.b.sphere_start[i] + s[i] + e)] = 1;
    sphere *= g.k.count(r);
  }

  for (long r = 0; r < radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    const long base = bld.b.sphere_start[i];
    const long next = bld.b.sphere_start[i + 1];
    const long end_base = next + s[i + 1];
    for (long v = 0; v < s[i]; ++v) {
      for (long j = 0; j < k[i]; ++j) bld.add_edge(base + v, next + v * k[i] + j);
      for (long j = 0; j < kt[i]; ++j) bld.add_edge(base + v, end_base + v * kt[i] + j);
    }
  }

  bld.finish_degrees();
  return std::move(bld.b);
}

FiniteBall build_path_ball(const WeightedPath& g, long radius, const BallCaps& caps) {
  Builder bld(radius, caps);
  for (long r = 0; r <= radius; ++r) bld.reserve_class(r, 1);
  for (long r = 0; r < radius; ++r) {
    const double a = g.weight.value(r);
    if (!(a > 0.0)) throw InconsistentProfile(r, "path weight a(r) must be positive");
    bld.add_edge(r, r + 1, a);
  }
  bld.finish_degrees();
  return std::move(bld.b);
}

}  // namespace

FiniteBall materialize_ball(const GraphFamily& g, long radius, const BallCaps& caps) {
  if (radius < 0) throw std::domain_error("materialize_ball: radius must be >= 0");
  if (const auto* wp = std::get_if<WeightedPath>(&g)) return build_path_ball(*wp, radius, caps);
  if (const auto* dt = std::get_if<DecoratedTree>(&g)) return build_decorated_ball(*dt, radius, caps);
  return build_profile_ball(lower_to_profile(g), radius, caps);
}

}  // namespace radheat
