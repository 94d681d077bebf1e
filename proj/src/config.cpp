// config.cpp — strict JSON ingestion: every key is known by name or rejected.
#include "radheat/config.hpp"

#include <fstream>

namespace radheat {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

double as_number(const Json& j, const std::string& ctx) {
  if (!j.is_number()) fail(ctx + " must be a number");
  return j.get<double>();
}

long as_integer(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(ctx + " must be an integer");
  return j.get<long>();
}

std::uint64_t as_u64(const Json& j, const std::string& ctx) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0) fail(ctx + " must be >= 0");
    return static_cast<std::uint64_t>(v);
  }
  fail(ctx + " must be a nonnegative integer");
}

std::string as_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) fail(ctx + " must be a string");
  return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& ctx) {
  if (!j.is_boolean()) fail(ctx + " must be a boolean");
  return j.get<bool>();
}

std::vector<double> as_number_array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) fail(ctx + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_number(e, ctx + " entry"));
  return out;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& ctx) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed)
      if (key == a) {
        known = true;
        break;
      }
    if (!known) fail("unknown key \"" + key + "\" in " + ctx);
  }
}

Rounding rounding_from_string(const std::string& s) {
  if (s == "nearest") return Rounding::Nearest;
  if (s == "floor") return Rounding::Floor;
  if (s == "ceil") return Rounding::Ceil;
  fail("unknown rounding \"" + s + "\" (nearest, floor, ceil)");
}

Completeness completeness_from_string(const std::string& s) {
  if (s == "incomplete") return Completeness::Incomplete;
  if (s == "complete") return Completeness::Complete;
  if (s == "inconclusive") return Completeness::Inconclusive;
  fail("unknown verdict \"" + s + "\" (incomplete, complete, inconclusive)");
}

}  // namespace

SequenceSpec sequence_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_sequence(j.get<std::string>());
    if (!j.is_object()) fail("sequence must be a mini-language string or an object");
    if (!j.contains("kind")) fail("sequence object needs a \"kind\"");
    const std::string kind = as_string(j.at("kind"), "sequence.kind");
    if (kind == "const") {
      check_keys(j, {"kind", "c"}, "const sequence");
      if (!j.contains("c")) fail("const sequence needs \"c\"");
      return SequenceSpec::constant(as_number(j.at("c"), "const.c"));
    }
    if (kind == "poly") {
      check_keys(j, {"kind", "p", "rounding"}, "poly sequence");
      if (!j.contains("p")) fail("poly sequence needs \"p\"");
      Rounding rd = Rounding::Nearest;
      if (j.contains("rounding")) rd = rounding_from_string(as_string(j.at("rounding"), "poly.rounding"));
      return SequenceSpec::polynomial(as_number(j.at("p"), "poly.p"), rd);
    }
    if (kind == "geom") {
      check_keys(j, {"kind", "b", "c"}, "geom sequence");
      if (!j.contains("b") || !j.contains("c")) fail("geom sequence needs \"b\" and \"c\"");
      return SequenceSpec::geometric(as_number(j.at("b"), "geom.b"), as_number(j.at("c"), "geom.c"));
    }
    if (kind == "table") {
      check_keys(j, {"kind", "values", "tail"}, "table sequence");
      if (!j.contains("values") || !j.contains("tail")) fail("table sequence needs \"values\" and \"tail\"");
      return SequenceSpec::table(as_number_array(j.at("values"), "table.values"),
                                 sequence_from_json(j.at("tail")));
    }
    fail("unknown sequence kind \"" + kind + "\"");
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

GraphFamily family_from_json(const Json& j) {
  if (!j.is_object()) fail("family must be an object");
  if (!j.contains("type")) fail("family needs a \"type\"");
  const std::string type = as_string(j.at("type"), "family.type");

  auto need = [&j, &type](const char* key) -> const Json& {
    if (!j.contains(key)) fail("family \"" + type + "\" needs \"" + std::string(key) + "\"");
    return j.at(key);
  };

  if (type == "tree") {
    check_keys(j, {"type", "k"}, "tree family");
    return SymmetricTree{sequence_from_json(need("k"))};
  }
  if (type == "decorated-tree") {
    check_keys(j, {"type", "k", "kTilde"}, "decorated-tree family");
    return DecoratedTree{sequence_from_json(need("k")), sequence_from_json(need("kTilde"))};
  }
  if (type == "intra-sphere-tree") {
    check_keys(j, {"type", "k", "m0"}, "intra-sphere-tree family");
    IntraSphereRule rule;
    if (j.contains("m0")) rule.m_zero = sequence_from_json(j.at("m0"));
    return IntraSphereTree{sequence_from_json(need("k")), std::move(rule)};
  }
  if (type == "antitree") {
    check_keys(j, {"type", "S"}, "antitree family");
    return Antitree{sequence_from_json(need("S"))};
  }
  if (type == "weighted-path") {
    check_keys(j, {"type", "a"}, "weighted-path family");
    return WeightedPath{sequence_from_json(need("a"))};
  }
  if (type == "custom-radial") {
    check_keys(j, {"type", "kPlus", "kMinus", "m0", "S", "name"}, "custom-radial family");
    RadialProfile p{sequence_from_json(need("kPlus")), sequence_from_json(need("kMinus")),
                    sequence_from_json(need("m0")), sequence_from_json(need("S")), ""};
    p.name = j.contains("name") ? as_string(j.at("name"), "custom-radial.name") : "custom-radial";
    return CustomRadial{std::move(p)};
  }
  fail("unknown family type \"" + type + "\"");
}

Json family_to_json(const GraphFamily& g) {
  struct V {
    Json operator()(const SymmetricTree& t) const {
      return Json{{"type", "tree"}, {"k", t.k.describe()}};
    }
    Json operator()(const DecoratedTree& t) const {
      return Json{{"type", "decorated-tree"}, {"k", t.k.describe()}, {"kTilde", t.k_tilde.describe()}};
    }
    Json operator()(const IntraSphereTree& t) const {
      return Json{{"type", "intra-sphere-tree"},
                  {"k", t.k.describe()},
                  {"m0", t.rule.m_zero ? t.rule.m_zero->describe() : "complete"}};
    }
    Json operator()(const Antitree& t) const {
      return Json{{"type", "antitree"}, {"S", t.sphere.describe()}};
    }
    Json operator()(const WeightedPath& t) const {
      return Json{{"type", "weighted-path"}, {"a", t.weight.describe()}};
    }
    Json operator()(const CustomRadial& t) const {
      return Json{{"type", "custom-radial"},
                  {"kPlus", t.profile.k_plus.describe()},
                  {"kMinus", t.profile.k_minus.describe()},
                  {"m0", t.profile.m_zero.describe()},
                  {"S", t.profile.sphere.describe()},
                  {"name", t.profile.name}};
    }
  };
  return std::visit(V{}, g);
}

void apply_config_json(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) fail("config root must be an object");
  for (const auto& [key, val] : j.items()) {
    if (key == "family") cfg.family = family_from_json(val);
    else if (key == "lambda") cfg.lambda = as_number(val, key);
    else if (key == "depth") cfg.depth = as_integer(val, key);
    else if (key == "attachment") cfg.attachment = as_string(val, key);
    else if (key == "times") cfg.times = as_number_array(val, key);
    else if (key == "rStart") cfg.r_start = as_integer(val, key);
    else if (key == "rMax") cfg.r_max = as_integer(val, key);
    else if (key == "atR") cfg.at_r = as_integer(val, key);
    else if (key == "solver") cfg.solver = as_string(val, key);
    else if (key == "solverTol") cfg.solver_tol = as_number(val, key);
    else if (key == "doublingTol") cfg.doubling_tol = as_number(val, key);
    else if (key == "paths") cfg.paths = as_integer(val, key);
    else if (key == "seed") cfg.seed = as_u64(val, key);
    else if (key == "rSim") cfg.r_sim = as_integer(val, key);
    else if (key == "horizon") cfg.horizon = as_number(val, key);
    else if (key == "trace") cfg.trace = as_bool(val, key);
    else if (key == "compareRadius") cfg.compare_radius = as_integer(val, key);
    else if (key == "compareT") cfg.compare_t = as_number(val, key);
    else if (key == "vertexCap") cfg.vertex_cap = as_integer(val, key);
    else if (key == "compareTol") cfg.compare_tol = as_number(val, key);
    else if (key == "numericHorizon") cfg.numeric_horizon = as_integer(val, key);
    else if (key == "out") cfg.out = as_string(val, key);
    else if (key == "catalogFile") cfg.catalog_file = as_string(val, key);
    else fail("unknown config key \"" + key + "\"");
  }
  parse_solver(cfg.solver);  // validate eagerly
  if (cfg.attachment != "end" && cfg.attachment != "path")
    fail("attachment must be \"end\" or \"path\"");
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open config file \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    fail("config file \"" + path + "\": " + e.what());
  }
  RunConfig cfg;
  apply_config_json(cfg, j);
  return cfg;
}

std::vector<CatalogEntry> catalog_from_json(const Json& j) {
  if (!j.is_array()) fail("catalog root must be an array");
  std::vector<CatalogEntry> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_object()) fail("catalog entries must be objects");
    check_keys(e, {"name", "family", "expected", "justification"}, "catalog entry");
    if (!e.contains("name") || !e.contains("family") || !e.contains("expected"))
      fail("catalog entries need \"name\", \"family\" and \"expected\"");
    CatalogEntry entry{as_string(e.at("name"), "catalog.name"), family_from_json(e.at("family")),
                       completeness_from_string(as_string(e.at("expected"), "catalog.expected")),
                       e.contains("justification") ? as_string(e.at("justification"), "catalog.justification")
                                                   : ""};
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open catalog file \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    fail("catalog file \"" + path + "\": " + e.what());
  }
  return catalog_from_json(j);
}

}  // namespace radheat
