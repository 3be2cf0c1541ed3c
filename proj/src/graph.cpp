// Copyright 2026 The fldrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fldrank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "fldrank/parallel.hpp"

namespace fldrank {

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw std::invalid_argument("duplicate node label '" + g.labels_[i] + "'");
    }
  }

  std::vector<std::vector<NodeId>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = adj[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.offsets_[i + 1] = g.offsets_[i] + row.size();
  }
  g.neighbors_.reserve(g.offsets_[n]);
  for (const auto& row : adj) g.neighbors_.insert(g.neighbors_.end(), row.begin(), row.end());
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

}  // namespace

ParsedEdgeList parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  ParsedEdgeList out;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#' || tokens.front().front() == '%') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(tokens.size()));
    }

    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    if (u == v) {
      ++out.self_loops_dropped;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  out.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buffer.str();
}

ParsedEdgeList load_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path));
}

std::size_t DistanceField::component_size() const {
  std::size_t total = 0;
  for (auto c : shell_counts) total += c;
  return total;
}

DistanceField bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw std::out_of_range("BFS source " + std::to_string(source) + " out of range");
  }
  DistanceField field;
  field.source = source;
  field.dist.assign(g.node_count(), kUnreachable);
  field.dist[source] = 0;
  field.shell_counts.push_back(1);

  std::queue<NodeId> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    const std::int32_t next = field.dist[v] + 1;
    for (NodeId w : g.neighbors(v)) {
      if (field.dist[w] != kUnreachable) continue;
      field.dist[w] = next;
      if (static_cast<std::size_t>(next) >= field.shell_counts.size()) field.shell_counts.push_back(0);
      ++field.shell_counts[next];
      frontier.push(w);
    }
  }
  field.d_max = static_cast<std::int32_t>(field.shell_counts.size()) - 1;
  return field;
}

std::vector<DistanceField> all_distance_fields(const Graph& g, std::size_t threads) {
  std::vector<DistanceField> fields(g.node_count());
  parallel_for(g.node_count(), threads,
               [&](std::size_t i) { fields[i] = bfs_distances(g, static_cast<NodeId>(i)); });
  return fields;
}

ComponentMap connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  ComponentMap map;
  map.component_id.assign(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (map.component_id[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(map.component_sizes.size());
    std::size_t size = 0;
    map.component_id[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (map.component_id[w] != kUnset) continue;
        map.component_id[w] = id;
        stack.push_back(w);
      }
    }
    map.component_sizes.push_back(size);
  }
  return map;
}

std::int32_t diameter(std::span<const DistanceField> fields) {
  std::int32_t best = 0;
  for (const auto& f : fields) best = std::max(best, f.d_max);
  return best;
}

}  // namespace fldrank
