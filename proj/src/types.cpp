#include "radheat/types.hpp"

#include <cmath>
#include <limits>

namespace mp = boost::multiprecision;

namespace radheat {

// The -O3 inliner assumes a worst-case limb count for the cpp_int shifts
// below and flags library-internal memcpys; the shift amounts are bounded by
// msb of the operands.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif

Real to_real(const Count& v) {
  if (v == 0) return 0.0L;
  if (v < 0) return -to_real(Count(-v));
  const long bits = static_cast<long>(mp::msb(v));
  if (bits <= 16200) return v.convert_to<Real>();
  // Keep the top 128 bits exactly, rescale; ldexp saturates to +inf when the
  // value is out of range, which is the wanted behaviour.
  const long drop = bits - 128;
  if (drop > 1'000'000'000L) return std::numeric_limits<Real>::infinity();
  const Count top = v >> static_cast<unsigned>(drop);
  return std::ldexp(top.convert_to<Real>(), static_cast<int>(drop));
}

Real count_ratio(const Count& num, const Count& den) {
  if (den <= 0) throw std::domain_error("count_ratio: nonpositive denominator");
  if (num == 0) return 0.0L;
  if (num < 0) return -count_ratio(Count(-num), den);
  const long nb = static_cast<long>(mp::msb(num));
  const long db = static_cast<long>(mp::msb(den));
  if (nb - db > 16500) return std::numeric_limits<Real>::infinity();
  long shift = db - nb + 128;
  if (shift < 0) shift = 0;
  const Count q = (num << static_cast<unsigned>(shift)) / den;
  return std::ldexp(to_real(q), static_cast<int>(-shift));
}

#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

InconsistentProfile::InconsistentProfile(long r_, const std::string& what_)
    : std::runtime_error("inconsistent profile at r=" + std::to_string(r_) + ": " + what_), r(r_) {}

UnsupportedLowering::UnsupportedLowering(const std::string& what_) : std::runtime_error(what_) {}

Unrealizable::Unrealizable(long r_, const std::string& what_)
    : std::runtime_error("unrealizable at r=" + std::to_string(r_) + ": " + what_), r(r_) {}

CapExceeded::CapExceeded(const std::string& what_) : std::runtime_error(what_) {}

SolverBudgetExceeded::SolverBudgetExceeded(double t_reached_, const std::string& what_)
    : std::runtime_error(what_), t_reached(t_reached_) {}

ConfigError::ConfigError(const std::string& what_) : std::runtime_error(what_) {}

}  // namespace radheat
