// harmonic.cpp — scale-invariant recurrences for radial lambda-harmonic
// functions and the boundedness probe applied to their increments.
#include "radheat/harmonic.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace radheat {

namespace {

constexpr Real kRealInf = std::numeric_limits<Real>::infinity();

struct Accumulator {
  std::vector<Real> w{1.0L};
  std::vector<Real> d;
  std::vector<Real> d_floor;
  std::optional<long> diverged_at;

  // Push w(r+1) = w(r) + inc; returns false once the range is exhausted.
  bool step(Real inc, Real inc_floor) {
    const Real next = w.back() + inc;
    if (!std::isfinite(next)) {
      diverged_at = static_cast<long>(w.size());
      return false;
    }
    d.push_back(inc);
    d_floor.push_back(inc_floor);
    w.push_back(next);
    return true;
  }

  RadialSolution finish(Real lambda, std::string family) const {
    RadialSolution s;
    s.lambda = lambda;
    s.family = std::move(family);
    s.diverged_at = diverged_at;
    s.w = Eigen::Map<const VecR>(w.data(), static_cast<Eigen::Index>(w.size()));
    s.increment = Eigen::Map<const VecR>(d.data(), static_cast<Eigen::Index>(d.size()));
    s.increment_floor = Eigen::Map<const VecR>(d_floor.data(), static_cast<Eigen::Index>(d_floor.size()));
    return s;
  }
};

}  // namespace

LambdaParam::LambdaParam(Real lambda_) : lambda(lambda_) {
  if (!(lambda > 0.0L) || !(lambda < kRealInf))
    throw std::invalid_argument("lambda must be a positive finite number");
}

Real LambdaParam::alpha() const { return lambda / (1.0L + lambda); }

Real LambdaParam::beta() const {
  // positive root of beta^2 + lambda beta - lambda = 0
  return (std::sqrt(lambda * (lambda + 4.0L)) - lambda) / 2.0L;
}

RadialSolution solve_radial(const RadialProfile& p, LambdaParam lam, long depth) {
  if (depth < 0) throw std::domain_error("solve_radial: depth must be >= 0");
  const Real lambda = lam.lambda;
  Accumulator acc;

  // y(r) = Σ_{i<=r} S(i)w(i) / (k+(r)S(r)), carried via
  //   y(r) = y(r-1) k-(r)/k+(r) + w(r)/k+(r),
  // so only the degree ratio k-(r)/k+(r) is ever formed. z is the same
  // recurrence with w frozen at w(0), giving the increment floor.
  Real y = 0.0L, z = 0.0L;
  for (long r = 0; r < depth; ++r) {
    const Real kp = static_cast<Real>(p.k_plus.value(r));
    if (r == 0) {
      y = acc.w[0] / kp;
      z = 1.0L / kp;
    } else {
      const Real rho = static_cast<Real>(p.k_minus.value(r)) / kp;
      y = y * rho + acc.w.back() / kp;
      z = z * rho + 1.0L / kp;
    }
    if (!acc.step(lambda * y, lambda * z)) break;
  }
  return acc.finish(lambda, p.name.empty() ? "radial" : p.name);
}

RadialSolution solve_decorated_tree(const SequenceSpec& k, const SequenceSpec& k_tilde, LambdaParam lam,
                                    long depth, Attachment attachment) {
  if (depth < 0) throw std::domain_error("solve_decorated_tree: depth must be >= 0");
  const Real lambda = lam.lambda;
  const Real gamma = attachment == Attachment::EndVertex ? lam.alpha() : lam.beta();
  Accumulator acc;

  Real prev_d = 0.0L;
  for (long r = 0; r < depth; ++r) {
    const Real kr = static_cast<Real>(k.value(r));
    const Real ktr = static_cast<Real>(k_tilde.value(r));
    if (!(kr >= 1.0L)) throw InconsistentProfile(r, "forward degree k(r) must be >= 1");
    const Real lead = ((gamma * ktr + lambda) / kr) * acc.w.back();
    const Real inc = lead + prev_d / kr;
    if (!acc.step(inc, lead)) break;
    prev_d = inc;
  }
  std::string family = "decorated-tree k=" + k.describe() + " k~=" + k_tilde.describe() +
                       (attachment == Attachment::EndVertex ? "" : " (ray ends)");
  return acc.finish(lambda, std::move(family));
}

RadialSolution solve_weighted_path(const SequenceSpec& a, LambdaParam lam, long depth) {
  if (depth < 0) throw std::domain_error("solve_weighted_path: depth must be >= 0");
  const Real lambda = lam.lambda;
  Accumulator acc;

  // u(r) = Σ_{i<=r} v(i) / a(r), advanced by the weight ratio a(r-1)/a(r).
  Real u = 0.0L;
  Real prev_a = 1.0L;
  for (long r = 0; r < depth; ++r) {
    const Real ar = static_cast<Real>(a.value(r));
    if (!(ar > 0.0L)) throw InconsistentProfile(r, "path weight a(r) must be positive");
    if (r == 0)
      u = acc.w[0] / ar;
    else
      u = u * (prev_a / ar) + acc.w.back() / ar;
    const Real floor = lambda * static_cast<Real>(r + 1) / ar;
    if (!acc.step(lambda * u, floor)) break;
    prev_a = ar;
  }
  return acc.finish(lambda, "weighted-path a=" + a.describe());
}

BoundednessReport boundedness_probe(const RadialSolution& s, const ProbeOptions& opt) {
  BoundednessReport rep;
  const long n = s.increment.size();

  if (s.diverged_at) {
    rep.result = Boundedness::Unbounded;
    rep.growth_rate = kRealInf;
    rep.note = "values left the extended floating range at r=" + std::to_string(*s.diverged_at);
    return rep;
  }
  if (n < 2) {
    rep.note = "solution too short to probe";
    return rep;
  }

  const long window = std::min<long>(std::max<long>(opt.window, 1), n - 1);
  Real max_ratio = 0.0L;
  Real log_sum = 0.0L;
  long ratios = 0;
  bool stalled = true;
  for (long i = n - window; i < n; ++i) {
    const Real prev = s.increment[i - 1];
    const Real cur = s.increment[i];
    if (prev <= 0.0L) continue;  // underflowed increments: treat as stalled
    stalled = false;
    const Real ratio = cur / prev;
    max_ratio = std::max(max_ratio, ratio);
    if (ratio > 0.0L) {
      log_sum += std::log(ratio);
      ++ratios;
    }
  }
  rep.growth_rate = ratios > 0 ? std::exp(log_sum / static_cast<Real>(ratios)) : 1.0L;

  if (stalled || max_ratio <= 1.0L - static_cast<Real>(opt.ratio_threshold)) {
    // geometric tail: remaining mass is at most d_last * q / (1 - q)
    const Real q = stalled ? 0.0L : max_ratio;
    const Real d_last = s.increment[n - 1];
    rep.result = Boundedness::Bounded;
    rep.sup_estimate = s.w[s.w.size() - 1] + (q > 0.0L ? d_last * q / (1.0L - q) : 0.0L);
    rep.note = "trailing increment ratios certify a geometric tail (max ratio " +
               std::to_string(static_cast<double>(max_ratio)) + ")";
    return rep;
  }

  if (s.w[s.w.size() - 1] - s.w[0] >= static_cast<Real>(opt.divergence_sum) * s.w[0]) {
    rep.result = Boundedness::Unbounded;
    rep.note = "growth exceeded the divergence threshold without a summable tail";
    return rep;
  }

  rep.note = "no geometric tail and no divergence within the probed depth";
  return rep;
}

const char* boundedness_name(Boundedness b) {
  switch (b) {
    case Boundedness::Bounded: return "bounded";
    case Boundedness::Unbounded: return "unbounded";
    default: return "undetermined";
  }
}

}  // namespace radheat
