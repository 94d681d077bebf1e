// catalog.hpp — regression catalog of families with established verdicts.
#pragma once

#include "radheat/classify.hpp"

#include <string>
#include <vector>

namespace radheat {

struct CatalogEntry {
  std::string name;
  GraphFamily family;
  Completeness expected = Completeness::Inconclusive;
  std::string justification;
};

const std::vector<CatalogEntry>& builtin_catalog();

struct CatalogRow {
  std::string name;
  Completeness expected;
  Verdict got;
  bool pass = false;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;
  long passed = 0;
  bool all_pass = false;
};

CatalogReport run_catalog(const std::vector<CatalogEntry>& entries,
                          const ClassifyOptions& opt = {});

}  // namespace radheat
