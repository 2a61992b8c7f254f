// Copyright 2026 The skewrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewrank/graph_io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace skewrank {

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("graph JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("graph JSON: missing integer field \"n\"");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer())
        throw std::invalid_argument("graph JSON: each edge must be [i, j]");
      int i = pair[0].get<int>(), j = pair[1].get<int>();
      edges.push_back({std::min(i, j), std::max(i, j)});
    }
  }
  return Graph(doc["n"].get<int>(), edges);
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace skewrank
