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


#include "wsat/codec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {
namespace {

// Splits a comment-stripped line into unsigned integer tokens.
std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      throw ParseError(lineno, "expected a non-negative integer, got '" +
                                   std::string(line.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph decode_edge_list(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::uint64_t expected = 0;
  std::size_t seen = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto nums = parse_numbers(line, lineno);
    if (nums.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (nums.size() != 2) throw ParseError(lineno, "expected exactly two integers");

    if (!have_header) {
      if (nums[0] > (1U << 24)) throw ParseError(lineno, "vertex count too large");
      g = Graph(nums[0]);
      expected = nums[1];
      have_header = true;
    } else {
      if (seen == expected)
        throw ParseError(lineno, "more edge lines than the declared " + std::to_string(expected));
      const std::uint64_t u = nums[0], v = nums[1];
      if (u >= g.order() || v >= g.order())
        throw ParseError(lineno, "vertex index out of range for n = " + std::to_string(g.order()));
      if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
      if (!g.add_edge({static_cast<Vertex>(u), static_cast<Vertex>(v)}))
        throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n m' header");
  if (seen != expected)
    throw ParseError(lineno, "declared " + std::to_string(expected) + " edges, found " +
                                 std::to_string(seen));
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (const Edge& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_edge_list(ss.str());
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << encode_edge_list(g) << '\n';
}

}  // namespace wsat
