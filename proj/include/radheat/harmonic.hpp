// harmonic.hpp — radial lambda-harmonic functions. Their boundedness decides
// the conservation dichotomy of the minimal heat semigroup, so the solvers
// here are the analytic backbone of the classifier.
#pragma once

#include "radheat/family.hpp"

#include <optional>
#include <string>

namespace radheat {

struct LambdaParam {
  Real lambda;

  explicit LambdaParam(Real lambda_);

  // Difference coefficient of a pendant end vertex: a bounded solution with
  // (D + lambda)v = 0 at the end satisfies v(x) - v(end) = alpha v(x).
  Real alpha() const;

  // Difference coefficient of an attached one-way infinite path: the bounded
  // solution on the ray decays by rho = 1 - beta per step, where beta is the
  // positive root of beta^2 + lambda beta - lambda = 0.
  Real beta() const;
};

enum class Attachment { EndVertex, PathToInfinity };

// w(0..depth), normalized w(0)=1, with the per-step increments and the
// termwise lower bounds the comparison theorems provide. If the values leave
// the extended-precision range at some radius the finite prefix is kept and
// diverged_at records the first unrepresentable step.
struct RadialSolution {
  Real lambda = 1.0L;
  std::string family;
  VecR w;                // size depth+1 (or the finite prefix)
  VecR increment;        // d(r) = w(r+1) - w(r)
  VecR increment_floor;  // proven lower bound for d(r)
  std::optional<long> diverged_at;

  long depth() const { return w.size() - 1; }
};

// Monotone second-order recurrence for (D + lambda)w = 0 on the radial chain.
// The running volume sum is carried in the scale-invariant variable
// y(r) = Σ_{i<=r} S(i)w(i) / (k+(r)S(r)), so factorial sphere growth never
// leaves the floating-point range. m0 plays no role and is never read.
RadialSolution solve_radial(const RadialProfile& p, LambdaParam lam, long depth);

// Decorated tree: gamma = alpha (end vertices) or beta (attached rays).
//   w(1) - w(0)   = ((gamma k~(0) + lambda) / k(0)) w(0)
//   w(r+1) - w(r) = ((gamma k~(r) + lambda) / k(r)) w(r) + (w(r) - w(r-1)) / k(r)
RadialSolution solve_decorated_tree(const SequenceSpec& k, const SequenceSpec& k_tilde,
                                    LambdaParam lam, long depth,
                                    Attachment attachment = Attachment::EndVertex);

// Weighted half-line: v(r+1) - v(r) = (lambda / a(r)) Σ_{i<=r} v(i).
RadialSolution solve_weighted_path(const SequenceSpec& a, LambdaParam lam, long depth);

enum class Boundedness { Bounded, Unbounded, Undetermined };

struct BoundednessReport {
  Boundedness result = Boundedness::Undetermined;
  Real sup_estimate = 0.0L;  // Bounded: certified upper bound for sup w
  Real growth_rate = 1.0L;   // geometric mean of trailing increment ratios
  std::string note;
};

struct ProbeOptions {
  long window = 20;               // trailing increment-ratio window
  double ratio_threshold = 1e-3;  // summable when ratios <= 1 - threshold
  double divergence_sum = 1e6;    // unbounded when w - w(0) exceeds this * w(0)
};

// Conservative heuristic: Bounded only with a certified geometric tail,
// Unbounded only past the divergence threshold (or an overflowed solve),
// Undetermined otherwise.
BoundednessReport boundedness_probe(const RadialSolution& s, const ProbeOptions& opt = {});

const char* boundedness_name(Boundedness b);

}  // namespace radheat
