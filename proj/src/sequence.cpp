#include "radheat/sequence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mp = boost::multiprecision;

namespace radheat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool nearly_integral(double v) { return std::abs(v - std::llround(v)) <= 1e-9 * std::max(1.0, std::abs(v)); }

Count count_from_double(double v, Rounding rounding, long r, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(what) + ": value not finite/nonnegative at r=" + std::to_string(r));
  if (v > 4.5e15)
    throw std::domain_error(std::string(what) + ": value too large for exact rounding at r=" + std::to_string(r));
  double rounded;
  switch (rounding) {
    case Rounding::Floor: rounded = std::floor(v); break;
    case Rounding::Ceil: rounded = std::ceil(v); break;
    default: rounded = std::nearbyint(v); break;
  }
  return Count(static_cast<long long>(rounded));
}

const char* rounding_name(Rounding r) {
  switch (r) {
    case Rounding::Floor: return "floor";
    case Rounding::Ceil: return "ceil";
    default: return "nearest";
  }
}

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

bool GrowthClass::super_polynomial() const { return !zero && (fact > 0.0 || ratio > 1.0); }

GrowthClass GrowthClass::times(const GrowthClass& o) const {
  if (zero || o.zero) return GrowthClass{0, 1, 0, true};
  return GrowthClass{fact + o.fact, ratio * o.ratio, degree + o.degree, false};
}

GrowthClass GrowthClass::over(const GrowthClass& o) const {
  if (o.zero) throw std::domain_error("GrowthClass: division by the zero class");
  if (zero) return GrowthClass{0, 1, 0, true};
  return GrowthClass{fact - o.fact, ratio / o.ratio, degree - o.degree, false};
}

GrowthClass GrowthClass::max_of(const GrowthClass& a, const GrowthClass& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  if (a.fact != b.fact) return a.fact > b.fact ? a : b;
  if (a.ratio != b.ratio) return a.ratio > b.ratio ? a : b;
  return a.degree >= b.degree ? a : b;
}

bool series_converges(const GrowthClass& g) {
  if (g.zero) return true;
  if (g.fact < 0.0) return true;
  if (g.fact > 0.0) return false;
  if (g.ratio < 1.0) return true;
  if (g.ratio > 1.0) return false;
  return g.degree < -1.0;
}

SequenceSpec::SequenceSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SequenceSpec SequenceSpec::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("constant sequence: c must be >= 0");
  return SequenceSpec(std::make_shared<Node>(Node{Node::Constant{c}}));
}

SequenceSpec SequenceSpec::polynomial(double p, Rounding rounding) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw std::invalid_argument("polynomial sequence: p must be >= 0");
  return SequenceSpec(std::make_shared<Node>(Node{Node::Polynomial{p, rounding}}));
}

SequenceSpec SequenceSpec::geometric(double b, double c) {
  if (!(b >= 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c))
    throw std::invalid_argument("geometric sequence: need b >= 0, c > 0");
  return SequenceSpec(std::make_shared<Node>(Node{Node::Geometric{b, c}}));
}

SequenceSpec SequenceSpec::table(std::vector<double> values, SequenceSpec tail) {
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("table sequence: values must be >= 0");
  return SequenceSpec(std::make_shared<Node>(Node{Node::Table{std::move(values), std::move(tail)}}));
}

SequenceSpec SequenceSpec::shifted(SequenceSpec base, long offset) {
  return SequenceSpec(std::make_shared<Node>(Node{Node::Shifted{std::move(base), offset}}));
}

SequenceSpec SequenceSpec::product_prefix(SequenceSpec factor) {
  return SequenceSpec(std::make_shared<Node>(Node{Node::ProductPrefix{std::move(factor)}}));
}

SequenceSpec SequenceSpec::custom(std::function<Count(long)> count_fn, std::string label,
                                  std::optional<GrowthClass> cls) {
  return SequenceSpec(std::make_shared<Node>(Node{Node::Custom{std::move(count_fn), std::move(label), cls}}));
}

double SequenceSpec::value(long r) const {
  if (r < 0) throw std::domain_error("sequence evaluated at negative radius");
  struct V {
    long r;
    const SequenceSpec* self;
    double operator()(const Node::Constant& n) const { return n.c; }
    double operator()(const Node::Polynomial& n) const { return std::pow(static_cast<double>(r + 1), n.p); }
    double operator()(const Node::Geometric& n) const { return n.b * std::pow(n.c, static_cast<double>(r)); }
    double operator()(const Node::Table& n) const {
      if (r < static_cast<long>(n.values.size())) return n.values[static_cast<size_t>(r)];
      return n.tail.value(r);
    }
    double operator()(const Node::Shifted& n) const {
      const long q = r + n.offset;
      return q < 0 ? 0.0 : n.base.value(q);
    }
    double operator()(const Node::ProductPrefix& n) const {
      double acc = 1.0;
      for (long i = 0; i < r && std::isfinite(acc); ++i) acc *= n.factor.value(i);
      return acc;
    }
    double operator()(const Node::Custom& n) const {
      return static_cast<double>(to_real(n.count_fn(r)));
    }
  };
  const double v = std::visit(V{r, this}, node_->v);
  if (v < 0.0 || std::isnan(v))
    throw std::domain_error("sequence value negative/undefined at r=" + std::to_string(r));
  return v;
}

Count SequenceSpec::count(long r) const {
  if (r < 0) throw std::domain_error("sequence evaluated at negative radius");
  struct V {
    long r;
    Count operator()(const Node::Constant& n) const {
      if (!nearly_integral(n.c)) throw std::domain_error("constant sequence used as count but not integral");
      return Count(static_cast<long long>(std::llround(n.c)));
    }
    Count operator()(const Node::Polynomial& n) const {
      if (nearly_integral(n.p) && n.p <= 1024.0) {
        return mp::pow(Count(r + 1), static_cast<unsigned>(std::llround(n.p)));
      }
      return count_from_double(std::pow(static_cast<double>(r + 1), n.p), n.rounding, r, "polynomial");
    }
    Count operator()(const Node::Geometric& n) const {
      if (nearly_integral(n.b) && nearly_integral(n.c)) {
        return Count(static_cast<long long>(std::llround(n.b))) *
               mp::pow(Count(static_cast<long long>(std::llround(n.c))), static_cast<unsigned>(r));
      }
      return count_from_double(n.b * std::pow(n.c, static_cast<double>(r)), Rounding::Nearest, r, "geometric");
    }
    Count operator()(const Node::Table& n) const {
      if (r < static_cast<long>(n.values.size())) {
        const double v = n.values[static_cast<size_t>(r)];
        if (!nearly_integral(v)) throw std::domain_error("table sequence used as count but not integral");
        return Count(static_cast<long long>(std::llround(v)));
      }
      return n.tail.count(r);
    }
    Count operator()(const Node::Shifted& n) const {
      const long q = r + n.offset;
      return q < 0 ? Count(0) : n.base.count(q);
    }
    Count operator()(const Node::ProductPrefix& n) const {
      Count acc = 1;
      for (long i = 0; i < r; ++i) acc *= n.factor.count(i);
      return acc;
    }
    Count operator()(const Node::Custom& n) const { return n.count_fn(r); }
  };
  Count c = std::visit(V{r}, node_->v);
  if (c < 0) throw std::domain_error("sequence count negative at r=" + std::to_string(r));
  return c;
}

std::optional<GrowthClass> SequenceSpec::growth_class() const {
  struct V {
    std::optional<GrowthClass> operator()(const Node::Constant& n) const {
      if (n.c == 0.0) return GrowthClass{0, 1, 0, true};
      return GrowthClass{0, 1, 0, false};
    }
    std::optional<GrowthClass> operator()(const Node::Polynomial& n) const {
      return GrowthClass{0, 1, n.p, false};
    }
    std::optional<GrowthClass> operator()(const Node::Geometric& n) const {
      if (n.b == 0.0) return GrowthClass{0, 1, 0, true};
      return GrowthClass{0, n.c, 0, false};
    }
    std::optional<GrowthClass> operator()(const Node::Table& n) const { return n.tail.growth_class(); }
    std::optional<GrowthClass> operator()(const Node::Shifted& n) const { return n.base.growth_class(); }
    std::optional<GrowthClass> operator()(const Node::ProductPrefix& n) const {
      // Π_{i<r} factor(i): constant c gives c^r, degree-p growth gives a
      // factorial power, anything already super-polynomial leaves the scale.
      auto f = n.factor.growth_class();
      if (!f || f->zero) return std::nullopt;
      if (f->super_polynomial()) return GrowthClass{kInf, 1, 0, false};
      if (f->degree > 0.0) return GrowthClass{f->degree, 1, 0, false};
      if (f->degree < 0.0 || f->ratio < 1.0) return std::nullopt;  // shrinking spheres: not a valid size
      // constant class: need the actual constant for the ratio
      if (const auto* c = std::get_if<Node::Constant>(&n.factor.node().v)) {
        if (c->c > 1.0) return GrowthClass{0, c->c, 0, false};
        if (c->c == 1.0) return GrowthClass{0, 1, 0, false};
        return std::nullopt;
      }
      if (const auto* g = std::get_if<Node::Geometric>(&n.factor.node().v)) {
        if (g->c == 1.0) {
          if (g->b > 1.0) return GrowthClass{0, g->b, 0, false};
          if (g->b == 1.0) return GrowthClass{0, 1, 0, false};
        }
        return std::nullopt;
      }
      return std::nullopt;
    }
    std::optional<GrowthClass> operator()(const Node::Custom& n) const { return n.cls; }
  };
  return std::visit(V{}, node_->v);
}

bool SequenceSpec::parametric() const {
  struct V {
    bool operator()(const Node::Constant&) const { return true; }
    bool operator()(const Node::Polynomial&) const { return true; }
    bool operator()(const Node::Geometric&) const { return true; }
    bool operator()(const Node::Table&) const { return false; }
    bool operator()(const Node::Shifted& n) const { return n.base.parametric(); }
    bool operator()(const Node::ProductPrefix&) const { return false; }
    bool operator()(const Node::Custom&) const { return false; }
  };
  return std::visit(V{}, node_->v);
}

std::string SequenceSpec::describe() const {
  struct V {
    std::string operator()(const Node::Constant& n) const { return "const:" + trim_number(n.c); }
    std::string operator()(const Node::Polynomial& n) const {
      std::string s = "poly:" + trim_number(n.p);
      if (n.rounding != Rounding::Nearest) s += std::string(",") + rounding_name(n.rounding);
      return s;
    }
    std::string operator()(const Node::Geometric& n) const {
      return "geom:" + trim_number(n.b) + "," + trim_number(n.c);
    }
    std::string operator()(const Node::Table& n) const {
      std::string s = "table:";
      for (size_t i = 0; i < n.values.size(); ++i) {
        if (i) s += ",";
        s += trim_number(n.values[i]);
      }
      s += ";tail=" + n.tail.describe();
      return s;
    }
    std::string operator()(const Node::Shifted& n) const {
      return "shift(" + n.base.describe() + "," + std::to_string(n.offset) + ")";
    }
    std::string operator()(const Node::ProductPrefix& n) const {
      return "prefix-product(" + n.factor.describe() + ")";
    }
    std::string operator()(const Node::Custom& n) const { return n.label; }
  };
  return std::visit(V{}, node_->v);
}

namespace {

double parse_number(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number \"" + s + "\" in sequence \"" + ctx + "\"");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

SequenceSpec parse_sequence(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("sequence \"" + text + "\": expected kind:params");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (kind == "const") return SequenceSpec::constant(parse_number(rest, text));
    if (kind == "poly") {
      const auto parts = split(rest, ',');
      if (parts.size() == 1) return SequenceSpec::polynomial(parse_number(parts[0], text));
      if (parts.size() == 2) {
        Rounding rd;
        if (parts[1] == "nearest") rd = Rounding::Nearest;
        else if (parts[1] == "floor") rd = Rounding::Floor;
        else if (parts[1] == "ceil") rd = Rounding::Ceil;
        else throw ConfigError("sequence \"" + text + "\": unknown rounding \"" + parts[1] + "\"");
        return SequenceSpec::polynomial(parse_number(parts[0], text), rd);
      }
      throw ConfigError("sequence \"" + text + "\": poly takes p[,rounding]");
    }
    if (kind == "geom") {
      const auto parts = split(rest, ',');
      if (parts.size() != 2) throw ConfigError("sequence \"" + text + "\": geom takes b,c");
      return SequenceSpec::geometric(parse_number(parts[0], text), parse_number(parts[1], text));
    }
    if (kind == "table") {
      const auto semi = rest.find(";tail=");
      if (semi == std::string::npos)
        throw ConfigError("sequence \"" + text + "\": table requires ;tail=<spec>");
      std::vector<double> values;
      for (const auto& part : split(rest.substr(0, semi), ','))
        values.push_back(parse_number(part, text));
      return SequenceSpec::table(std::move(values), parse_sequence(rest.substr(semi + 6)));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("sequence \"" + text + "\": " + e.what());
  }
  throw ConfigError("sequence \"" + text + "\": unknown kind \"" + kind + "\"");
}

}  // namespace radheat
