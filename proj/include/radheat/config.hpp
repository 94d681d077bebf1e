// config.hpp — strict JSON ingestion for run configuration, family specs and
// catalog files. Unknown fields are rejected by name.
#pragma once

#include "radheat/catalog.hpp"
#include "radheat/family.hpp"
#include "radheat/heat.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radheat {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::optional<GraphFamily> family;

  // harmonic solve
  double lambda = 1.0;
  long depth = 200;
  std::string attachment = "end";  // end | path

  // semigroup mass
  std::vector<double> times{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  long r_start = 16;
  long r_max = 1 << 20;
  std::optional<long> at_r;  // single-radius mass, no doubling
  std::string solver = "auto";
  double solver_tol = 1e-9;
  double doubling_tol = 1e-6;

  // simulation
  long paths = 100000;
  std::uint64_t seed = 1;
  long r_sim = 200;
  double horizon = 1.0;
  bool trace = false;

  // kernel comparison
  long compare_radius = 4;
  double compare_t = 1.0;
  long vertex_cap = 4000;
  double compare_tol = 1e-9;

  // classification
  long numeric_horizon = 4096;

  std::string out;  // CSV destination ("" = no CSV emitted)
  std::string catalog_file;
};

SequenceSpec sequence_from_json(const Json& j);         // object or mini-language string
GraphFamily family_from_json(const Json& j);
Json family_to_json(const GraphFamily& g);

void apply_config_json(RunConfig& cfg, const Json& j);  // strict
RunConfig load_config_file(const std::string& path);

std::vector<CatalogEntry> catalog_from_json(const Json& j);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

}  // namespace radheat
