// common.hpp — family fixtures and small helpers shared by the tests.
#pragma once

#include "radheat/family.hpp"

#include <cmath>

namespace radheat::testing {

inline SymmetricTree binary_tree() { return {SequenceSpec::constant(2)}; }
inline SymmetricTree quadratic_tree() { return {SequenceSpec::polynomial(2)}; }
inline SymmetricTree geometric_tree() { return {SequenceSpec::geometric(2, 2)}; }
inline Antitree quadratic_antitree() { return {SequenceSpec::polynomial(2)}; }
inline Antitree cubic_antitree() { return {SequenceSpec::polynomial(3)}; }
inline DecoratedTree decorated_ql() {
  return {SequenceSpec::polynomial(2), SequenceSpec::polynomial(1)};
}
inline WeightedPath linear_path() { return {SequenceSpec::polynomial(1)}; }
inline WeightedPath cubic_path() { return {SequenceSpec::polynomial(3)}; }

// Antitree-style profile S=(r+1)^3 with a selectable lateral rule, used by
// the lateral-irrelevance checks.
inline RadialProfile cubic_profile_with_lateral(bool complete_spheres) {
  const SequenceSpec s = SequenceSpec::polynomial(3);
  SequenceSpec m0 = complete_spheres
                        ? SequenceSpec::custom(
                              [s](long r) { return s.count(r) - 1; }, "complete-sphere((r+1)^3)")
                        : SequenceSpec::constant(0);
  return RadialProfile{SequenceSpec::shifted(s, 1), SequenceSpec::shifted(s, -1), std::move(m0), s,
                       complete_spheres ? "cubic-complete" : "cubic-bare"};
}

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline long double rel_err_l(long double got, long double want) {
  const long double scale = std::max(std::abs(want), 1e-300L);
  return std::abs(got - want) / scale;
}

}  // namespace radheat::testing
