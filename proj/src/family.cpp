// family.cpp — naming, description and profile lowering of the graph families.
#include "radheat/family.hpp"

namespace radheat {

namespace {

SequenceSpec root_zero_then(SequenceSpec tail) { return SequenceSpec::table({0.0}, std::move(tail)); }

SequenceSpec complete_sphere_lateral(const SequenceSpec& sphere) {
  return SequenceSpec::custom(
      [sphere](long r) { return sphere.count(r) - 1; },
      "complete-sphere(" + sphere.describe() + ")");
}

}  // namespace

std::string family_name(const GraphFamily& g) {
  struct V {
    std::string operator()(const SymmetricTree&) const { return "tree"; }
    std::string operator()(const DecoratedTree&) const { return "decorated-tree"; }
    std::string operator()(const IntraSphereTree&) const { return "intra-sphere-tree"; }
    std::string operator()(const Antitree&) const { return "antitree"; }
    std::string operator()(const WeightedPath&) const { return "weighted-path"; }
    std::string operator()(const CustomRadial&) const { return "custom-radial"; }
  };
  return std::visit(V{}, g);
}

std::string family_describe(const GraphFamily& g) {
  struct V {
    std::string operator()(const SymmetricTree& t) const { return "tree k=" + t.k.describe(); }
    std::string operator()(const DecoratedTree& t) const {
      return "decorated-tree k=" + t.k.describe() + " k~=" + t.k_tilde.describe();
    }
    std::string operator()(const IntraSphereTree& t) const {
      return "intra-sphere-tree k=" + t.k.describe() +
             " m0=" + (t.rule.m_zero ? t.rule.m_zero->describe() : std::string("complete"));
    }
    std::string operator()(const Antitree& t) const { return "antitree S=" + t.sphere.describe(); }
    std::string operator()(const WeightedPath& t) const { return "weighted-path a=" + t.weight.describe(); }
    std::string operator()(const CustomRadial& t) const {
      return "custom-radial k+=" + t.profile.k_plus.describe() + " k-=" + t.profile.k_minus.describe() +
             " m0=" + t.profile.m_zero.describe() + " S=" + t.profile.sphere.describe();
    }
  };
  return std::visit(V{}, g);
}

RadialProfile lower_to_profile(const GraphFamily& g) {
  struct V {
    RadialProfile operator()(const SymmetricTree& t) const {
      return RadialProfile{t.k, root_zero_then(SequenceSpec::constant(1.0)), SequenceSpec::constant(0.0),
                           SequenceSpec::product_prefix(t.k), "tree k=" + t.k.describe()};
    }
    RadialProfile operator()(const DecoratedTree&) const {
      throw UnsupportedLowering("decorated trees carry pendant ends inside spheres; no radial profile exists");
    }
    RadialProfile operator()(const IntraSphereTree& t) const {
      const SequenceSpec sphere = SequenceSpec::product_prefix(t.k);
      SequenceSpec m0 = t.rule.m_zero ? root_zero_then(*t.rule.m_zero) : complete_sphere_lateral(sphere);
      return RadialProfile{t.k, root_zero_then(SequenceSpec::constant(1.0)), std::move(m0), sphere,
                           "intra-sphere-tree k=" + t.k.describe()};
    }
    RadialProfile operator()(const Antitree& t) const {
      return RadialProfile{SequenceSpec::shifted(t.sphere, +1), SequenceSpec::shifted(t.sphere, -1),
                           SequenceSpec::constant(0.0), t.sphere, "antitree S=" + t.sphere.describe()};
    }
    RadialProfile operator()(const WeightedPath&) const {
      throw UnsupportedLowering("weighted paths use a weighted Laplacian; the unweighted profile does not apply");
    }
    RadialProfile operator()(const CustomRadial& t) const { return t.profile; }
  };
  return std::visit(V{}, g);
}

}  // namespace radheat
