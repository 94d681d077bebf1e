// types.hpp — shared scalar types and error taxonomy.
#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace radheat {

// Vertex/edge counts are kept exact: sphere sizes of rapidly branching trees
// overflow 64 bits near r ~ 20 and leave the long-double range near r ~ 10^3,
// yet their ratios stay perfectly tame.
using Count = boost::multiprecision::cpp_int;

// Solution arrays use 80-bit extended precision; the recurrences are monotone
// and benefit from the extra exponent range more than from the extra digits.
using Real = long double;

using VecR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// Exact count as Real; values beyond the representable range map to +inf.
Real to_real(const Count& v);

// num/den as Real, accurate to ~1 ulp even when both operands are far outside
// the floating-point range (quotient formed in integer arithmetic behind a
// 128-bit guard shift).
Real count_ratio(const Count& num, const Count& den);

struct InconsistentProfile : std::runtime_error {
  long r;
  InconsistentProfile(long r_, const std::string& what_);
};

struct UnsupportedLowering : std::runtime_error {
  explicit UnsupportedLowering(const std::string& what_);
};

struct Unrealizable : std::runtime_error {
  long r;
  Unrealizable(long r_, const std::string& what_);
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what_);
};

struct SolverBudgetExceeded : std::runtime_error {
  double t_reached;
  SolverBudgetExceeded(double t_reached_, const std::string& what_);
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what_);
};

}  // namespace radheat
