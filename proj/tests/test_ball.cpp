// test_ball.cpp — explicit ball materialization: counts, degrees, caps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "radheat/ball.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace radheat;
using namespace radheat::testing;

namespace {

std::vector<long> degrees_at_radius(const FiniteBall& b, long r) {
  std::vector<long> out;
  for (long v = b.sphere_start[r]; v < b.sphere_start[r + 1]; ++v)
    out.push_back(b.degree[static_cast<size_t>(v)]);
  return out;
}

bool simple(const FiniteBall& b) {
  std::set<std::pair<long, long>> seen;
  for (const auto& e : b.edges) {
    if (e.first == e.second) return false;
    if (!seen.insert(e).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("binary tree ball has the textbook counts") {
  const FiniteBall b = materialize_ball(GraphFamily{binary_tree()}, 2);
  CHECK(b.vertex_count() == 7);   // 1 + 2 + 4
  CHECK(b.edges.size() == 6);
  CHECK(b.interior_count() == 3);
  CHECK(b.sphere_size(0) == 1);
  CHECK(b.sphere_size(1) == 2);
  CHECK(b.sphere_size(2) == 4);
  CHECK(simple(b));
  const auto mid = degrees_at_radius(b, 1);
  CHECK(std::all_of(mid.begin(), mid.end(), [](long d) { return d == 3; }));
}

TEST_CASE("quadratic antitree ball joins consecutive spheres completely") {
  const FiniteBall b = materialize_ball(GraphFamily{quadratic_antitree()}, 2);
  CHECK(b.vertex_count() == 1 + 4 + 9);
  CHECK(b.edges.size() == 4 + 36);  // complete joins 1x4 and 4x9
  CHECK(simple(b));
  const auto mid = degrees_at_radius(b, 1);
  CHECK(std::all_of(mid.begin(), mid.end(), [](long d) { return d == 10; }));
}

TEST_CASE("decorated ball keeps pendant ends in their parent's radius class plus one") {
  const FiniteBall b = materialize_ball(GraphFamily{decorated_ql()}, 2);
  // tree part: 1 + 1 + 4; ends: k~(0)=1 under the root, k~(1)=2 under radius 1
  CHECK(b.vertex_count() == 9);
  CHECK(b.edges.size() == 8);
  long ends = 0;
  for (auto d : b.is_decoration) ends += d;
  CHECK(ends == 3);
  // ends of radius-1 parents live at radius 2
  for (long v = 0; v < b.vertex_count(); ++v)
    if (b.is_decoration[static_cast<size_t>(v)]) {
      CHECK(b.degree[static_cast<size_t>(v)] == 1);
      CHECK((b.vertex_radius[static_cast<size_t>(v)] == 1 || b.vertex_radius[static_cast<size_t>(v)] == 2));
    }
  CHECK(simple(b));
}

TEST_CASE("complete lateral edges give the expected regular degrees") {
  const GraphFamily g{IntraSphereTree{SequenceSpec::constant(2), {}}};
  const FiniteBall b = materialize_ball(g, 3);
  CHECK(simple(b));
  // radius 2 vertex: 1 up + 2 down + 3 lateral (complete on 4 vertices)
  const auto deg2 = degrees_at_radius(b, 2);
  CHECK(std::all_of(deg2.begin(), deg2.end(), [](long d) { return d == 6; }));
}

TEST_CASE("explicit circulant lateral degree is honoured") {
  IntraSphereRule rule;
  // lateral degree 2 fits only from r = 2 on, where S(r) - 1 >= 2
  rule.m_zero = SequenceSpec::table({0, 0}, SequenceSpec::constant(2));
  const GraphFamily g{IntraSphereTree{SequenceSpec::constant(2), rule}};
  const FiniteBall b = materialize_ball(g, 3);
  CHECK(simple(b));
  const auto deg2 = degrees_at_radius(b, 2);
  CHECK(std::all_of(deg2.begin(), deg2.end(), [](long d) { return d == 5; }));
}

TEST_CASE("odd lateral degree needs an even sphere") {
  IntraSphereRule rule;
  rule.m_zero = SequenceSpec::table({0, 0, 1}, SequenceSpec::constant(0));
  // ternary tree: S(2) = 9 odd, m0(2) = 1 -> no perfect matching
  const GraphFamily g{IntraSphereTree{SequenceSpec::constant(3), rule}};
  CHECK_THROWS_AS(materialize_ball(g, 3), Unrealizable);
  // binary tree: S(2) = 4 even, half-turn matching works
  const GraphFamily ok{IntraSphereTree{SequenceSpec::constant(2), rule}};
  const FiniteBall b = materialize_ball(ok, 3);
  CHECK(simple(b));
  CHECK(degrees_at_radius(b, 2) == std::vector<long>{4, 4, 4, 4});
}

TEST_CASE("weighted path ball is a line with the profile weights") {
  const FiniteBall b = materialize_ball(GraphFamily{cubic_path()}, 4);
  CHECK(b.vertex_count() == 5);
  REQUIRE(b.edges.size() == 4);
  CHECK(b.edge_weight[0] == 1.0);
  CHECK(b.edge_weight[2] == 27.0);
  CHECK(b.degree[0] == 1);
  CHECK(b.degree[2] == 2);
}

TEST_CASE("block rule spreads outward edges evenly") {
  // ternary tree: every radius-2 vertex must see exactly one parent
  const FiniteBall b = materialize_ball(GraphFamily{SymmetricTree{SequenceSpec::constant(3)}}, 2);
  std::map<long, long> parents;
  for (const auto& e : b.edges)
    if (b.vertex_radius[static_cast<size_t>(e.second)] == 2) ++parents[e.second];
  CHECK(parents.size() == 9);
  for (const auto& [v, c] : parents) CHECK(c == 1);
}

TEST_CASE("unrealizable outward demand is rejected") {
  // k+(0) = 2 but S(1) = 1: two outward edges cannot land on one vertex simply
  RadialProfile p{SequenceSpec::constant(2), SequenceSpec::table({0}, SequenceSpec::constant(2)),
                  SequenceSpec::constant(0), SequenceSpec::constant(1), "pinch"};
  CHECK_THROWS_AS(materialize_ball(GraphFamily{CustomRadial{p}}, 2), Unrealizable);
}

TEST_CASE("caps stop oversized materializations") {
  BallCaps caps;
  caps.max_vertices = 100;
  CHECK_THROWS_AS(materialize_ball(GraphFamily{quadratic_tree()}, 6, caps), CapExceeded);
  BallCaps edge_caps;
  edge_caps.max_edges = 30;
  CHECK_THROWS_AS(materialize_ball(GraphFamily{quadratic_antitree()}, 2, edge_caps), CapExceeded);
}

TEST_CASE("materialization is deterministic") {
  const FiniteBall a = materialize_ball(GraphFamily{cubic_antitree()}, 3);
  const FiniteBall b = materialize_ball(GraphFamily{cubic_antitree()}, 3);
  CHECK(a.edges == b.edges);
  CHECK(a.vertex_radius == b.vertex_radius);
}
