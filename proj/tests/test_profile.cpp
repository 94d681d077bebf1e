// test_profile.cpp — profile tabulation, conventions, and family lowering.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "radheat/family.hpp"

using namespace radheat;
using namespace radheat::testing;

TEST_CASE("tree lowering satisfies the edge identity") {
  const RadialProfile p = lower_to_profile(GraphFamily{quadratic_tree()});
  const ProfileTable t = tabulate(p, 6);
  CHECK(t.sphere[0] == 1);
  CHECK(t.sphere[1] == 1);   // k(0) = 1
  CHECK(t.sphere[3] == 36);  // (3!)^2
  CHECK(t.k_minus[0] == 0);
  for (long r = 1; r <= 6; ++r) CHECK(t.k_minus[static_cast<size_t>(r)] == 1);
  for (long r = 0; r < 6; ++r)
    CHECK(t.k_plus[static_cast<size_t>(r)] * t.sphere[static_cast<size_t>(r)] ==
          t.k_minus[static_cast<size_t>(r) + 1] * t.sphere[static_cast<size_t>(r) + 1]);
}

TEST_CASE("antitree lowering joins consecutive spheres completely") {
  const RadialProfile p = lower_to_profile(GraphFamily{cubic_antitree()});
  const ProfileTable t = tabulate(p, 5);
  CHECK(t.k_plus[0] == 8);    // S(1) = 2^3
  CHECK(t.k_plus[2] == 64);   // S(3) = 4^3
  CHECK(t.k_minus[3] == 27);  // S(2) = 3^3
  CHECK(t.m_zero[4] == 0);
  CHECK(t.volume[3] == 100);  // 1 + 8 + 27 + 64
}

TEST_CASE("intra-sphere lowering defaults to complete spheres") {
  const RadialProfile p = lower_to_profile(GraphFamily{IntraSphereTree{SequenceSpec::polynomial(2), {}}});
  const ProfileTable t = tabulate(p, 4);
  CHECK(t.m_zero[0] == 0);
  for (long r = 1; r <= 4; ++r)
    CHECK(t.m_zero[static_cast<size_t>(r)] == t.sphere[static_cast<size_t>(r)] - 1);
}

TEST_CASE("decorated trees and weighted paths do not lower") {
  CHECK_THROWS_AS(lower_to_profile(GraphFamily{decorated_ql()}), UnsupportedLowering);
  CHECK_THROWS_AS(lower_to_profile(GraphFamily{linear_path()}), UnsupportedLowering);
}

TEST_CASE("convention violations are rejected with the offending radius") {
  // k-(0) must be 0
  RadialProfile bad{SequenceSpec::constant(2), SequenceSpec::constant(1), SequenceSpec::constant(0),
                    SequenceSpec::product_prefix(SequenceSpec::constant(2)), "bad"};
  CHECK_THROWS_AS(tabulate(bad, 3), InconsistentProfile);

  // S(0) must be 1
  RadialProfile bad2{SequenceSpec::constant(1), SequenceSpec::table({0}, SequenceSpec::constant(1)),
                     SequenceSpec::constant(0), SequenceSpec::constant(2), "bad2"};
  CHECK_THROWS_AS(tabulate(bad2, 3), InconsistentProfile);

  // edge identity break: two outward edges per vertex but S stays 1
  RadialProfile bad3{SequenceSpec::constant(2), SequenceSpec::table({0}, SequenceSpec::constant(1)),
                     SequenceSpec::constant(0), SequenceSpec::constant(1), "bad3"};
  try {
    tabulate(bad3, 5);
    CHECK(false);
  } catch (const InconsistentProfile& e) {
    CHECK(e.r == 0);  // first violated identity
  }
}

TEST_CASE("realizability validation adds lateral bounds and parity") {
  // m0 = S(r): no simple graph has a vertex adjacent to itself
  RadialProfile bad = cubic_profile_with_lateral(false);
  bad.m_zero = SequenceSpec::table({0}, SequenceSpec::polynomial(3));
  CHECK_THROWS_AS(validate_profile(bad, 4), Unrealizable);

  // odd m0 * S: no 1-regular graph on 3 vertices
  RadialProfile odd{SequenceSpec::shifted(SequenceSpec::polynomial(1), 1),
                    SequenceSpec::shifted(SequenceSpec::polynomial(1), -1),
                    SequenceSpec::table({0}, SequenceSpec::constant(1)), SequenceSpec::polynomial(1),
                    "odd"};
  CHECK_THROWS_AS(validate_profile(odd, 4), Unrealizable);

  CHECK_NOTHROW(validate_profile(cubic_profile_with_lateral(true), 6));
  CHECK_NOTHROW(validate_profile(cubic_profile_with_lateral(false), 6));
}

TEST_CASE("rates verify the identity exactly up to the requested radius") {
  const RadialProfile p = lower_to_profile(GraphFamily{quadratic_tree()});
  const RateTable rt = rates(p, 64);
  CHECK(rt.k_plus[0] == 1.0);
  CHECK(rt.k_plus[10] == 121.0);
  CHECK(rt.k_minus[10] == 1.0);
  CHECK(rt.m_zero.empty());

  const RateTable with_lat = rates(cubic_profile_with_lateral(true), 16, true);
  CHECK(with_lat.m_zero[2] == 26.0);  // 3^3 - 1

  // a profile violating the identity beyond the double lattice is caught
  RadialProfile sneaky{SequenceSpec::constant(3),
                       SequenceSpec::table({0}, SequenceSpec::constant(1)), SequenceSpec::constant(0),
                       SequenceSpec::custom(
                           [](long r) {
                             Count s = 1;
                             for (long i = 0; i < r; ++i) s *= 3;
                             if (r == 40) s += 1;  // off by one deep inside
                             return s;
                           },
                           "3^r-off"),
                       "sneaky"};
  CHECK_THROWS_AS(rates(sneaky, 64), InconsistentProfile);
}

TEST_CASE("volume accumulates sphere counts exactly") {
  const RadialProfile p = lower_to_profile(GraphFamily{cubic_antitree()});
  CHECK(volume(p, 0) == 1);
  CHECK(volume(p, 3) == 100);
  const RadialProfile q = lower_to_profile(GraphFamily{quadratic_tree()});
  CHECK(volume(q, 3) == 1 + 1 + 4 + 36);
}

TEST_CASE("lateral rule is invisible to every radial table") {
  const RadialProfile bare = cubic_profile_with_lateral(false);
  const RadialProfile full = cubic_profile_with_lateral(true);
  const ProfileTable tb = tabulate(bare, 12);
  const ProfileTable tf = tabulate(full, 12);
  CHECK(tb.k_plus == tf.k_plus);
  CHECK(tb.k_minus == tf.k_minus);
  CHECK(tb.sphere == tf.sphere);
  CHECK(tb.volume == tf.volume);
  CHECK(tb.m_zero != tf.m_zero);  // the only difference by construction
}
