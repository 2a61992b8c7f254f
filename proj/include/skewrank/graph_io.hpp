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

#ifndef SKEWRANK_GRAPH_IO_HPP
#define SKEWRANK_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "skewrank/graph.hpp"

namespace skewrank {

/// {"n": <int>, "edges": [[i, j], ...]} with 1-based endpoints and i < j,
/// preceded by a "schema_version" field.
std::string graph_to_json(const Graph& g);
/// Accepts pairs in either orientation; throws std::invalid_argument on
/// malformed input, loops, or out-of-range endpoints.
Graph graph_from_json(std::string_view text);

std::string graph_to_dot(const Graph& g, std::string_view name = "G");

}  // namespace skewrank

#endif  // SKEWRANK_GRAPH_IO_HPP
