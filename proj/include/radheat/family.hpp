// family.hpp — the graph families under study and their lowering to radial
// profiles where one exists.
#pragma once

#include "radheat/profile.hpp"

#include <optional>
#include <variant>

namespace radheat {

// Rooted tree, k(r) forward neighbours per vertex at radius r.
struct SymmetricTree {
  SequenceSpec k;
};

// Tree plus k~(r) pendant end vertices per sphere-r vertex; the ends sit at
// radius r+1.
struct DecoratedTree {
  SequenceSpec k;
  SequenceSpec k_tilde;
};

// Lateral edges inside each sphere: complete graph by default, or an explicit
// per-vertex lateral degree m0(r). The radial analysis is insensitive to the
// arrangement.
struct IntraSphereRule {
  std::optional<SequenceSpec> m_zero;  // nullopt = complete sphere
};

// Tree with intra-sphere edges added.
struct IntraSphereTree {
  SequenceSpec k;
  IntraSphereRule rule;
};

// Consecutive spheres completely joined: k+(r) = S(r+1), k-(r) = S(r-1).
struct Antitree {
  SequenceSpec sphere;
};

// Half-line with edge weights a(r) on {r, r+1}.
struct WeightedPath {
  SequenceSpec weight;
};

struct CustomRadial {
  RadialProfile profile;
};

using GraphFamily =
    std::variant<SymmetricTree, DecoratedTree, IntraSphereTree, Antitree, WeightedPath, CustomRadial>;

std::string family_name(const GraphFamily& g);
std::string family_describe(const GraphFamily& g);

// Throws UnsupportedLowering for DecoratedTree (pendant vertices break strict
// spherical symmetry) and WeightedPath (weighted Laplacian).
RadialProfile lower_to_profile(const GraphFamily& g);

}  // namespace radheat
