#include <json.hpp>

#include "geospin/error.hpp"
#include "geospin/manifold.hpp"
#include "metric_text.hpp"

namespace geospin {

using nlohmann::json;

MetricField build_metric(const MetricText& text) {
  const std::size_t n = text.metric.size();
  std::vector<std::vector<Expr>> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < text.metric[i].size(); ++j) {
      try {
        grid[i].push_back(parse_expr(text.metric[i][j], text.coordinates));
      } catch (const ParseError& e) {
        throw InvalidArgument("metric[" + std::to_string(i) + "][" + std::to_string(j) +
                              "]: " + e.what());
      }
    }
  }
  std::vector<DomainConstraint> domain;
  for (std::size_t k = 0; k < text.domain.size(); ++k) {
    try {
      auto cs = parse_constraints(text.domain[k], text.coordinates);
      domain.insert(domain.end(), cs.begin(), cs.end());
    } catch (const ParseError& e) {
      throw InvalidArgument("domain[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return MetricField(text.name, text.coordinates, std::move(grid), std::move(domain));
}

MetricField load_manifest(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("manifest must be a JSON object");

  MetricText text;
  try {
    text.name = doc.value("name", std::string("manifest"));
    if (!doc.contains("coordinates")) throw InvalidArgument("manifest: missing 'coordinates'");
    if (!doc.contains("metric")) throw InvalidArgument("manifest: missing 'metric'");
    text.coordinates = doc.at("coordinates").get<std::vector<std::string>>();
    text.metric = doc.at("metric").get<std::vector<std::vector<std::string>>>();
    if (doc.contains("domain")) text.domain = doc.at("domain").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("manifest: wrong field type: ") + e.what());
  }
  if (doc.contains("dimension")) {
    const json& d = doc.at("dimension");
    if (!d.is_number_unsigned() || d.get<std::size_t>() != text.coordinates.size()) {
      throw InvalidArgument("manifest: 'dimension' does not match the number of coordinates");
    }
  }
  if (text.metric.size() != text.coordinates.size()) {
    throw InvalidArgument("manifest: 'metric' has " + std::to_string(text.metric.size()) +
                          " rows for " + std::to_string(text.coordinates.size()) +
                          " coordinates");
  }
  return build_metric(text);
}

std::string manifest_json(const MetricField& field) {
  const auto coords = field.coordinates();
  json metric = json::array();
  for (std::size_t i = 0; i < field.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < field.dimension(); ++j) {
      row.push_back(unparse(field.component(i, j), coords));
    }
    metric.push_back(std::move(row));
  }
  json domain = json::array();
  for (const auto& c : field.domain()) domain.push_back(c.to_string(coords));

  json doc;
  doc["name"] = field.name();
  doc["dimension"] = field.dimension();
  doc["coordinates"] = std::vector<std::string>(coords.begin(), coords.end());
  doc["metric"] = std::move(metric);
  doc["domain"] = std::move(domain);
  return doc.dump(2);
}

}  // namespace geospin
