#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xilab/bigfloat.hpp"

namespace xilab {

// A named bound evaluated at a parameter point, optionally against a measured value.
struct BoundReport {
  std::string bound_name;
  std::vector<std::pair<std::string, std::string>> params;
  BigReal bound_value;
  std::optional<BigReal> empirical_value;

  // Passes when there is nothing to compare or the measurement stays within the bound.
  bool pass() const { return !empirical_value || *empirical_value <= bound_value; }
  // bound - empirical; the bound itself when no measurement was made.
  BigReal margin() const { return empirical_value ? bound_value - *empirical_value : bound_value; }

  void add_param(std::string name, std::string value) { params.emplace_back(std::move(name), std::move(value)); }
};

}  // namespace xilab
