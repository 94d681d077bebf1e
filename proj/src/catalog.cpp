// catalog.cpp — built-in reference families with their decided verdicts.
#include "radheat/catalog.hpp"

namespace radheat {

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"tree-binary", SymmetricTree{SequenceSpec::constant(2.0)}, Completeness::Complete,
                 "Σ 1/k(r) = Σ 1/2 diverges: bounded branching cannot push the walk out in finite time."});
    v.push_back({"tree-quadratic", SymmetricTree{SequenceSpec::polynomial(2.0)}, Completeness::Incomplete,
                 "Σ 1/(r+1)^2 converges: quadratically growing branching explodes the walk."});
    v.push_back({"tree-intra-quadratic",
                 IntraSphereTree{SequenceSpec::polynomial(2.0), IntraSphereRule{}},
                 Completeness::Incomplete,
                 "lateral edges never move the radius, so the verdict matches the bare quadratic tree."});
    v.push_back({"tree-geometric", SymmetricTree{SequenceSpec::geometric(2.0, 2.0)}, Completeness::Incomplete,
                 "Σ 1/k(r) = Σ 2^-(r+1) converges: exponential branching explodes the walk."});
    v.push_back({"antitree-quadratic", Antitree{SequenceSpec::polynomial(2.0)}, Completeness::Complete,
                 "V(r)/(k+(r)S(r)) ~ r^-1 and the volume-outflow series diverges."});
    v.push_back({"antitree-cubic", Antitree{SequenceSpec::polynomial(3.0)}, Completeness::Incomplete,
                 "V(r)/(k+(r)S(r)) ~ r^-2 sums: complete joins between spheres overpower the cubic volume."});
    v.push_back({"decorated-quadratic-linear",
                 DecoratedTree{SequenceSpec::polynomial(2.0), SequenceSpec::polynomial(1.0)},
                 Completeness::Complete,
                 "Σ (k~(r)+1)/k(r) ~ Σ 1/r diverges: pendant ends trap the walk often enough to conserve mass."});
    v.push_back({"path-linear", WeightedPath{SequenceSpec::polynomial(1.0)}, Completeness::Complete,
                 "Σ r/a(r) = Σ r/(r+1) diverges: linear weights leave the half-line conservative."});
    v.push_back({"path-cubic", WeightedPath{SequenceSpec::polynomial(3.0)}, Completeness::Incomplete,
                 "Σ r/a(r) ~ Σ r^-2 converges: cubic weights explode the half-line diffusion."});
    v.push_back({"half-line",
                 CustomRadial{RadialProfile{
                     SequenceSpec::constant(1.0),
                     SequenceSpec::table({0.0}, SequenceSpec::constant(1.0)),
                     SequenceSpec::constant(0.0), SequenceSpec::constant(1.0), "half-line"}},
                 Completeness::Complete,
                 "V(r)/(k+(r)S(r)) = r+1 diverges termwise; unit degrees keep the walk conservative."});
    return v;
  }();
  return entries;
}

CatalogReport run_catalog(const std::vector<CatalogEntry>& entries, const ClassifyOptions& opt) {
  CatalogReport rep;
  rep.rows.reserve(entries.size());
  for (const auto& e : entries) {
    CatalogRow row;
    row.name = e.name;
    row.expected = e.expected;
    row.got = classify(e.family, opt);
    row.pass = row.got.status == e.expected;
    if (row.pass) ++rep.passed;
    rep.rows.push_back(std::move(row));
  }
  rep.all_pass = rep.passed == static_cast<long>(rep.rows.size());
  return rep;
}

}  // namespace radheat
