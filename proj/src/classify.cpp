// classify.cpp — series-based completeness verdicts: symbolic through the
// growth-class algebra when possible, numeric partial sums otherwise.
#include "radheat/classify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace radheat {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string format_class(const GrowthClass& g) {
  if (g.zero) return "0";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " * ";
    s += part;
  };
  if (g.fact != 0.0) append("(r!)^" + fmt(g.fact));
  if (g.ratio != 1.0) append(fmt(g.ratio) + "^r");
  if (g.degree != 0.0 || s.empty()) append("r^" + fmt(g.degree));
  return s;
}

// Is the derived growth class a true asymptotic statement (rather than a
// heuristic)? Closed-form kinds yes; tables inherit from the tail (a finite
// prefix never moves the class); prefix products inherit from the factor;
// custom kinds only when annotated.
bool class_exact(const SequenceSpec& s) {
  struct V {
    bool operator()(const SequenceSpec::Node::Constant&) const { return true; }
    bool operator()(const SequenceSpec::Node::Polynomial&) const { return true; }
    bool operator()(const SequenceSpec::Node::Geometric&) const { return true; }
    bool operator()(const SequenceSpec::Node::Table& n) const { return class_exact(n.tail); }
    bool operator()(const SequenceSpec::Node::Shifted& n) const { return class_exact(n.base); }
    bool operator()(const SequenceSpec::Node::ProductPrefix& n) const { return class_exact(n.factor); }
    bool operator()(const SequenceSpec::Node::Custom& n) const { return n.cls.has_value(); }
  };
  return std::visit(V{}, s.node().v);
}

std::optional<GrowthClass> one_over(const std::optional<GrowthClass>& g) {
  if (!g || g->zero) return std::nullopt;
  return GrowthClass{0.0, 1.0, 0.0, false}.over(*g);
}

struct SeriesCase {
  std::string test;     // series identifier for the verdict
  std::string formula;  // human-readable Σ ...
  std::optional<GrowthClass> term_class;
  bool exact = false;
  std::function<double(long)> term;  // numeric term at radius r
  // fallback: class of 1/k+(r); its divergence alone forces Complete
  std::optional<GrowthClass> outward_class;
  bool outward_exact = false;
};

Verdict decide(const SeriesCase& sc, const ClassifyOptions& opt) {
  Verdict v;
  v.test = sc.test;

  if (sc.term_class) {
    const bool conv = series_converges(*sc.term_class);
    v.status = conv ? Completeness::Incomplete : Completeness::Complete;
    v.exact = sc.exact;
    v.detail = sc.formula + ": term class " + format_class(*sc.term_class) + ", series " +
               (conv ? "converges" : "diverges");
    return v;
  }

  if (const auto inv = one_over(sc.outward_class); inv && !series_converges(*inv)) {
    v.status = Completeness::Complete;
    v.test = "outward-degree-fallback";
    v.exact = sc.outward_exact;
    v.detail = "Σ 1/k+(r) diverges (class 1/(" + format_class(*sc.outward_class) +
               ")), which dominates " + sc.formula + " from below";
    return v;
  }

  // numeric fallback
  const long horizon = std::max<long>(opt.numeric_horizon, 8);
  v.horizon = horizon;
  std::vector<double> terms(static_cast<size_t>(horizon) + 1);
  double sum = 0.0;
  const long stride = std::max<long>(1, horizon / 64);
  for (long r = 0; r <= horizon; ++r) {
    const double t = sc.term(r);
    terms[static_cast<size_t>(r)] = t;
    sum += t;
    if (r % stride == 0 || r == horizon) v.partial_sums.push_back(sum);
  }

  const long window = std::min<long>(std::max<long>(opt.window, 1), horizon);
  double max_ratio = 0.0;
  bool stalled = true;
  for (long r = horizon - window + 1; r <= horizon; ++r) {
    const double prev = terms[static_cast<size_t>(r) - 1];
    if (prev <= 0.0) continue;
    stalled = false;
    max_ratio = std::max(max_ratio, terms[static_cast<size_t>(r)] / prev);
  }

  if (stalled || max_ratio <= 1.0 - opt.ratio_threshold) {
    v.status = Completeness::Incomplete;
    v.detail = sc.formula + ": partial sum " + fmt(sum) + " at r=" + std::to_string(horizon) +
               " with a geometric-looking tail (max trailing term ratio " + fmt(max_ratio) + ")";
    return v;
  }
  if (sum >= opt.divergence_sum) {
    v.status = Completeness::Complete;
    v.detail = sc.formula + ": partial sum " + fmt(sum) + " exceeded the divergence threshold " +
               fmt(opt.divergence_sum) + " by r=" + std::to_string(horizon);
    return v;
  }

  v.status = Completeness::Inconclusive;
  v.detail = sc.formula + ": partial sum " + fmt(sum) + " at r=" + std::to_string(horizon) +
             ", no geometric tail and no divergence threshold crossed";
  return v;
}

SeriesCase degree_series(const SequenceSpec& k, const char* which) {
  SeriesCase sc;
  sc.test = "tree-degree-series";
  sc.formula = std::string("Σ 1/k(r)") + which;
  sc.term_class = one_over(k.growth_class());
  sc.exact = sc.term_class && class_exact(k);
  sc.term = [k](long r) {
    const double kr = k.value(r);
    return kr > 0.0 ? 1.0 / kr : 0.0;
  };
  sc.outward_class = k.growth_class();
  sc.outward_exact = sc.exact;
  return sc;
}

SeriesCase decorated_series(const DecoratedTree& g) {
  SeriesCase sc;
  sc.test = "decorated-end-series";
  sc.formula = "Σ (k~(r)+1)/k(r)";
  const auto kc = g.k.growth_class();
  const auto ktc = g.k_tilde.growth_class();
  if (kc && ktc) {
    const GrowthClass numer = GrowthClass::max_of(*ktc, GrowthClass{0.0, 1.0, 0.0, false});
    sc.term_class = numer.over(*kc);
    sc.exact = class_exact(g.k) && class_exact(g.k_tilde);
  }
  sc.term = [k = g.k, kt = g.k_tilde](long r) {
    const double kr = k.value(r);
    return kr > 0.0 ? (kt.value(r) + 1.0) / kr : 0.0;
  };
  sc.outward_class = kc;
  sc.outward_exact = kc && class_exact(g.k);
  return sc;
}

SeriesCase profile_series(const RadialProfile& p) {
  SeriesCase sc;
  sc.test = "volume-outflow-series";
  sc.formula = "Σ V(r)/(k+(r)S(r))";

  const auto sc_sphere = p.sphere.growth_class();
  const auto sc_kplus = p.k_plus.growth_class();
  if (sc_sphere && sc_kplus && !sc_sphere->zero) {
    if (sc_sphere->super_polynomial()) {
      // V(r)/S(r) is bounded above and below, so the series behaves as Σ 1/k+.
      sc.term_class = one_over(sc_kplus);
      sc.exact = sc.term_class && class_exact(p.sphere) && class_exact(p.k_plus);
      if (sc.term_class) sc.formula += " (~ Σ 1/k+(r), V/S bounded)";
    } else if (sc_sphere->fact == 0.0 && sc_sphere->ratio == 1.0 && sc_sphere->degree >= 0.0) {
      const GrowthClass vol{0.0, 1.0, sc_sphere->degree + 1.0, false};
      sc.term_class = vol.over(*sc_kplus).over(*sc_sphere);
      sc.exact = class_exact(p.sphere) && class_exact(p.k_plus);
    }
  }

  // numeric terms via the scaled running ratio T(r) = V(r)/(k+(r)S(r)):
  //   T(r) = T(r-1) k-(r)/k+(r) + 1/k+(r)
  auto state = std::make_shared<std::pair<long, double>>(-1, 0.0);
  sc.term = [p, state](long r) {
    if (r < state->first) *state = {-1, 0.0};
    while (state->first < r) {
      const long q = state->first + 1;
      const double kp = p.k_plus.value(q);
      const double t = q == 0 ? 1.0 / kp : state->second * (p.k_minus.value(q) / kp) + 1.0 / kp;
      *state = {q, t};
    }
    return state->second;
  };

  sc.outward_class = sc_kplus;
  sc.outward_exact = sc_kplus && class_exact(p.k_plus);
  return sc;
}

SeriesCase path_series(const WeightedPath& g) {
  SeriesCase sc;
  sc.test = "path-weight-series";
  sc.formula = "Σ r/a(r)";
  const auto ac = g.weight.growth_class();
  if (ac && !ac->zero) {
    sc.term_class = GrowthClass{0.0, 1.0, 1.0, false}.over(*ac);
    sc.exact = class_exact(g.weight);
  }
  sc.term = [a = g.weight](long r) {
    const double ar = a.value(r);
    return ar > 0.0 ? static_cast<double>(r) / ar : 0.0;
  };
  return sc;
}

}  // namespace

const char* completeness_name(Completeness c) {
  switch (c) {
    case Completeness::Incomplete: return "incomplete";
    case Completeness::Complete: return "complete";
    default: return "inconclusive";
  }
}

Verdict classify(const GraphFamily& g, const ClassifyOptions& opt) {
  struct V {
    const ClassifyOptions& opt;
    Verdict operator()(const SymmetricTree& t) const { return decide(degree_series(t.k, ""), opt); }
    Verdict operator()(const IntraSphereTree& t) const {
      Verdict v = decide(degree_series(t.k, " (lateral edges are radially invisible)"), opt);
      return v;
    }
    Verdict operator()(const DecoratedTree& t) const { return decide(decorated_series(t), opt); }
    Verdict operator()(const Antitree& t) const {
      return decide(profile_series(lower_to_profile(GraphFamily(t))), opt);
    }
    Verdict operator()(const CustomRadial& t) const { return decide(profile_series(t.profile), opt); }
    Verdict operator()(const WeightedPath& t) const { return decide(path_series(t), opt); }
  };
  return std::visit(V{opt}, g);
}

}  // namespace radheat
