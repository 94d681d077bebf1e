// profile.hpp — spherically symmetric graph data: outward/inward/lateral
// degrees and sphere sizes as functions of the radius.
#pragma once

#include "radheat/sequence.hpp"

#include <vector>

namespace radheat {

// Origin conventions k-(0)=0, m0(0)=0 are demanded of the sequences; lowered
// families satisfy them by construction, custom profiles are validated.
struct RadialProfile {
  SequenceSpec k_plus;
  SequenceSpec k_minus;
  SequenceSpec m_zero;
  SequenceSpec sphere;  // S(r), S(0)=1
  std::string name;
};

// Exact tables on 0..radius. Validations:
//   S(0) = 1, k+(r) >= 1, k-(0) = 0, m0(0) = 0,
//   k+(r) S(r) = k-(r+1) S(r+1) for r < radius  (edge-count identity)
struct ProfileTable {
  long radius = 0;
  std::vector<Count> k_plus, k_minus, m_zero, sphere, volume;
};
ProfileTable tabulate(const RadialProfile& p, long radius);

// Full validation including lateral-edge parity (m0(r) S(r) even); the parity
// condition decides realizability only, so the analytic layers skip it.
void validate_profile(const RadialProfile& p, long radius);

// Degree data as doubles for the semigroup/jump-chain layers. The edge-count
// identity is verified in exact arithmetic up to exact_check_radius (identity
// checks on factorial-size spheres are prohibitively large beyond a few
// thousand).
struct RateTable {
  long radius = 0;
  std::vector<double> k_plus, k_minus, m_zero;
};
RateTable rates(const RadialProfile& p, long radius, bool with_m_zero = false,
                long exact_check_radius = 4096);

// Exact ball volume V(r) = Σ_{i<=r} S(i).
Count volume(const RadialProfile& p, long r);

// Sphere sizes S(0..radius); prefix products are built incrementally.
std::vector<Count> sphere_counts(const SequenceSpec& sphere, long radius);

}  // namespace radheat
