// classify.hpp — completeness verdicts from the family-specific series tests.
#pragma once

#include "radheat/family.hpp"

#include <string>
#include <vector>

namespace radheat {

enum class Completeness { Incomplete, Complete, Inconclusive };

const char* completeness_name(Completeness c);

struct Verdict {
  Completeness status = Completeness::Inconclusive;
  std::string test;    // which series decided
  bool exact = false;  // true only for symbolic decisions on parametric input
  std::string detail;
  std::vector<double> partial_sums;  // decimated numeric evidence (may be empty)
  long horizon = 0;                  // numeric evaluation depth (0 = symbolic)
};

struct ClassifyOptions {
  long numeric_horizon = 4096;
  long window = 20;
  double ratio_threshold = 1e-3;
  double divergence_sum = 1e6;
};

// Decision series per family (convergent series <=> Incomplete):
//   tree / intra-sphere tree:  Σ 1/k(r)
//   decorated tree:            Σ (k~(r)+1)/k(r)
//   antitree / custom profile: Σ V(r)/(k+(r)S(r))
//   weighted path:             Σ r/a(r)
// plus the one-directional fallback: Σ 1/k+(r) divergent => Complete.
// Parametric input is decided symbolically through the class algebra and
// marked exact; otherwise partial sums with a ratio-window heuristic, and an
// honest Inconclusive when neither threshold fires.
Verdict classify(const GraphFamily& g, const ClassifyOptions& opt = {});

}  // namespace radheat
