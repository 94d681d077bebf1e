// sequence.hpp — radius-indexed degree/size sequences with exact integer
// evaluation and a coarse asymptotic-class algebra for the series tests.
#pragma once

#include "radheat/types.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace radheat {

enum class Rounding { Nearest, Floor, Ceil };

// Asymptotic class of a nonnegative sequence, just fine enough to decide the
// convergence of the series used by the completeness tests:
//
//   value(r) ~ C * (r!)^fact * ratio^r * r^degree
//
// `fact` may be +inf for growth beyond any factorial power (prefix products
// of geometric factors); such classes are only ever queried through
// super_polynomial().
struct GrowthClass {
  double fact = 0.0;
  double ratio = 1.0;
  double degree = 0.0;
  bool zero = false;

  bool super_polynomial() const;
  GrowthClass times(const GrowthClass& o) const;
  GrowthClass over(const GrowthClass& o) const;
  static GrowthClass max_of(const GrowthClass& a, const GrowthClass& b);
};

// Does Σ_r value(r) converge for a sequence of this class?
bool series_converges(const GrowthClass& g);

class SequenceSpec {
 public:
  struct Node;

  static SequenceSpec constant(double c);
  // (r+1)^p; the rounding rule applies when p makes the value fractional.
  static SequenceSpec polynomial(double p, Rounding rounding = Rounding::Nearest);
  // b * c^r
  static SequenceSpec geometric(double b, double c);
  // explicit leading values, then the tail rule evaluated at the same r
  static SequenceSpec table(std::vector<double> values, SequenceSpec tail);
  // r -> base(r + offset); negative argument evaluates to 0
  static SequenceSpec shifted(SequenceSpec base, long offset);
  // r -> Π_{i<r} factor(i)   (empty product = 1)
  static SequenceSpec product_prefix(SequenceSpec factor);
  static SequenceSpec custom(std::function<Count(long)> count_fn, std::string label,
                             std::optional<GrowthClass> cls = std::nullopt);

  double value(long r) const;  // real evaluation; +inf on overflow
  Count count(long r) const;   // exact integer evaluation

  // Class of the sequence (tables defer to their tail; custom kinds only when
  // annotated). nullopt when no class is derivable.
  std::optional<GrowthClass> growth_class() const;

  // True when every branch is a closed-form kind (constant / polynomial /
  // geometric, possibly shifted). Convergence decisions made from the class
  // of a parametric sequence are exact rather than heuristic.
  bool parametric() const;

  std::string describe() const;

  const Node& node() const { return *node_; }

 private:
  explicit SequenceSpec(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct SequenceSpec::Node {
  struct Constant {
    double c;
  };
  struct Polynomial {
    double p;
    Rounding rounding;
  };
  struct Geometric {
    double b;
    double c;
  };
  struct Table {
    std::vector<double> values;
    SequenceSpec tail;
  };
  struct Shifted {
    SequenceSpec base;
    long offset;
  };
  struct ProductPrefix {
    SequenceSpec factor;
  };
  struct Custom {
    std::function<Count(long)> count_fn;
    std::string label;
    std::optional<GrowthClass> cls;
  };

  std::variant<Constant, Polynomial, Geometric, Table, Shifted, ProductPrefix, Custom> v;
};

// Mini-language used by the command line:
//   "const:c"  "poly:p"  "poly:p,floor"  "geom:b,c"
//   "table:v0,v1,...;tail=const:c"
SequenceSpec parse_sequence(const std::string& text);

}  // namespace radheat
