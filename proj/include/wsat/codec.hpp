// Copyright 2026 The wsat Authors
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


#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wsat/graph.hpp"

namespace wsat {

// Edge-list text format:
//
//   # optional comments; everything after '#' on a line is ignored
//   n m
//   u v        (m lines, 0 <= u, v < n, u != v)
//
// Blank lines are skipped. decode accepts either endpoint order; encode
// emits "u v" with u < v in lexicographic order, lines joined by '\n' with
// no trailing newline. Errors carry the 1-based physical line number.
Graph decode_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

Graph read_edge_list_file(const std::filesystem::path& path);
// Writes encode_edge_list(g) followed by a newline.
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace wsat
