#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdrep/serialize.hpp"

namespace sdrep {

struct Check {
  std::string name;
  ojson params;
  ojson expected;
  ojson got;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double wall_time_s = 0.0;

  // pass is computed as expected == got.
  void add(std::string name, ojson params, ojson expected, ojson got);
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  ojson to_json() const;
};

// Overrides the default sweep of a suite.
struct GridOptions {
  std::optional<int> n_max;
  std::optional<int> lambda_max;
};

// ffl, lie, standard, labels, jlambda, phi, structural, jlaws, classification,
// jordan-holder, xi, all.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& suite, const GridOptions& grid = {});

// Dominant weights of the given rank with every coordinate <= max, lexicographic.
std::vector<Weight> weight_grid(int rank, int max);

}  // namespace sdrep
