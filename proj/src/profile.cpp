// profile.cpp — exact and floating tabulation of radial profiles, with the
// structural validations shared by every downstream layer.
#include "radheat/profile.hpp"

#include <cmath>

namespace radheat {

namespace {

// Incremental evaluator: prefix products (possibly behind shifts) are advanced
// one factor per radius instead of being recomputed from scratch.
class CountCursor {
 public:
  explicit CountCursor(const SequenceSpec& s) : seq_(s) {
    const SequenceSpec* cur = &s;
    while (const auto* sh = std::get_if<SequenceSpec::Node::Shifted>(&cur->node().v)) {
      offset_ += sh->offset;
      cur = &sh->base;
    }
    if (const auto* pp = std::get_if<SequenceSpec::Node::ProductPrefix>(&cur->node().v))
      factor_ = pp->factor;
  }

  Count at(long r) {
    if (!factor_) return seq_.count(r);
    const long q = r + offset_;
    if (q < 0) return Count(0);
    if (q < next_) {
      next_ = 0;
      acc_ = 1;
    }
    while (next_ < q) {
      acc_ *= factor_->count(next_);
      ++next_;
    }
    return acc_;
  }

 private:
  SequenceSpec seq_;
  std::optional<SequenceSpec> factor_;
  long offset_ = 0;
  long next_ = 0;
  Count acc_ = 1;
};

class ValueCursor {
 public:
  explicit ValueCursor(const SequenceSpec& s) : seq_(s) {
    const SequenceSpec* cur = &s;
    while (const auto* sh = std::get_if<SequenceSpec::Node::Shifted>(&cur->node().v)) {
      offset_ += sh->offset;
      cur = &sh->base;
    }
    if (const auto* pp = std::get_if<SequenceSpec::Node::ProductPrefix>(&cur->node().v))
      factor_ = pp->factor;
  }

  double at(long r) {
    if (!factor_) return seq_.value(r);
    const long q = r + offset_;
    if (q < 0) return 0.0;
    if (q < next_) {
      next_ = 0;
      acc_ = 1.0;
    }
    while (next_ < q) {
      acc_ *= factor_->value(next_);
      ++next_;
    }
    return acc_;
  }

 private:
  SequenceSpec seq_;
  std::optional<SequenceSpec> factor_;
  long offset_ = 0;
  long next_ = 0;
  double acc_ = 1.0;
};

void check_conventions(long r, const Count& kp, const Count& km, const Count& m0, const Count& s) {
  if (s < 1) throw InconsistentProfile(r, "sphere size S(r) must be >= 1");
  if (kp < 1) throw InconsistentProfile(r, "outward degree k+(r) must be >= 1");
  if (r == 0) {
    if (s != 1) throw InconsistentProfile(0, "S(0) must equal 1");
    if (km != 0) throw InconsistentProfile(0, "k-(0) must equal 0");
    if (m0 != 0) throw InconsistentProfile(0, "m0(0) must equal 0");
  } else if (km < 1) {
    throw InconsistentProfile(r, "inward degree k-(r) must be >= 1 off the root");
  }
}

}  // namespace

ProfileTable tabulate(const RadialProfile& p, long radius) {
  if (radius < 0) throw std::domain_error("tabulate: radius must be >= 0");
  ProfileTable t;
  t.radius = radius;
  const size_t n = static_cast<size_t>(radius) + 1;
  t.k_plus.reserve(n);
  t.k_minus.reserve(n);
  t.m_zero.reserve(n);
  t.sphere.reserve(n);
  t.volume.reserve(n);

  CountCursor kp(p.k_plus), km(p.k_minus), m0(p.m_zero), sp(p.sphere);
  Count vol = 0;
  for (long r = 0; r <= radius; ++r) {
    t.k_plus.push_back(kp.at(r));
    t.k_minus.push_back(km.at(r));
    t.m_zero.push_back(m0.at(r));
    t.sphere.push_back(sp.at(r));
    check_conventions(r, t.k_plus.back(), t.k_minus.back(), t.m_zero.back(), t.sphere.back());
    vol += t.sphere.back();
    t.volume.push_back(vol);
    if (r > 0 && t.k_plus[static_cast<size_t>(r) - 1] * t.sphere[static_cast<size_t>(r) - 1] !=
                     t.k_minus.back() * t.sphere.back())
      throw InconsistentProfile(r - 1, "edge-count identity k+(r) S(r) = k-(r+1) S(r+1) fails");
  }
  return t;
}

void validate_profile(const RadialProfile& p, long radius) {
  const ProfileTable t = tabulate(p, radius);
  for (long r = 0; r <= radius; ++r) {
    const size_t i = static_cast<size_t>(r);
    if (t.m_zero[i] > t.sphere[i] - 1)
      throw Unrealizable(r, "lateral degree m0(r) exceeds S(r) - 1");
    if ((t.m_zero[i] * t.sphere[i]) % 2 != 0)
      throw Unrealizable(r, "m0(r) S(r) is odd, so no lateral edge set exists");
  }
}

RateTable rates(const RadialProfile& p, long radius, bool with_m_zero, long exact_check_radius) {
  if (radius < 0) throw std::domain_error("rates: radius must be >= 0");
  RateTable t;
  t.radius = radius;
  const size_t n = static_cast<size_t>(radius) + 1;
  t.k_plus.reserve(n);
  t.k_minus.reserve(n);
  if (with_m_zero) t.m_zero.reserve(n);

  ValueCursor kp(p.k_plus), km(p.k_minus), m0(p.m_zero);
  for (long r = 0; r <= radius; ++r) {
    t.k_plus.push_back(kp.at(r));
    t.k_minus.push_back(km.at(r));
    if (t.k_plus.back() < 1.0) throw InconsistentProfile(r, "outward degree k+(r) must be >= 1");
    if (r == 0 ? t.k_minus.back() != 0.0 : t.k_minus.back() < 1.0)
      throw InconsistentProfile(r, r == 0 ? "k-(0) must equal 0" : "inward degree k-(r) must be >= 1 off the root");
    if (with_m_zero) t.m_zero.push_back(m0.at(r));
  }

  // Exact consistency pass (streamed: factorial-size spheres stay transient).
  const long check = std::min(radius, exact_check_radius);
  CountCursor ckp(p.k_plus), ckm(p.k_minus), cm0(p.m_zero), csp(p.sphere);
  Count prev_kp = 0, prev_s = 0;
  for (long r = 0; r <= check; ++r) {
    const Count kpc = ckp.at(r), kmc = ckm.at(r), m0c = cm0.at(r), sc = csp.at(r);
    check_conventions(r, kpc, kmc, m0c, sc);
    if (r > 0 && prev_kp * prev_s != kmc * sc)
      throw InconsistentProfile(r - 1, "edge-count identity k+(r) S(r) = k-(r+1) S(r+1) fails");
    prev_kp = kpc;
    prev_s = sc;
  }
  return t;
}

Count volume(const RadialProfile& p, long r) {
  if (r < 0) throw std::domain_error("volume: radius must be >= 0");
  CountCursor sp(p.sphere);
  Count vol = 0;
  for (long i = 0; i <= r; ++i) vol += sp.at(i);
  return vol;
}

std::vector<Count> sphere_counts(const SequenceSpec& sphere, long radius) {
  if (radius < 0) throw std::domain_error("sphere_counts: radius must be >= 0");
  std::vector<Count> out;
  out.reserve(static_cast<size_t>(radius) + 1);
  CountCursor sp(sphere);
  for (long r = 0; r <= radius; ++r) out.push_back(sp.at(r));
  return out;
}

}  // namespace radheat
