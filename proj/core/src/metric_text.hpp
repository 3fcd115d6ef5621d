#pragma once

#include <string>
#include <vector>

#include "geospin/manifold.hpp"

namespace geospin {

// A metric given as expression strings, before parsing.
struct MetricText {
  std::string name;
  std::vector<std::string> coordinates;
  std::vector<std::vector<std::string>> metric;
  std::vector<std::string> domain;
};

// Parses every entry; errors name the offending entry (e.g. "metric[0][1]").
MetricField build_metric(const MetricText& text);

}  // namespace geospin
