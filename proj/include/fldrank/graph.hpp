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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fldrank {

using NodeId = std::uint32_t;

/// Raised when an edge-list line cannot be interpreted.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an input file cannot be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Internal IDs are dense in [0, node_count()). Each node carries the external
/// label it was read with; neighbor lists are sorted ascending by internal ID.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and an undirected edge list over internal IDs.
  /// Self-loops and duplicate edges are discarded. Labels must be unique.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
};

struct ParsedEdgeList {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges = 0;
};

/// Parses whitespace-separated "<label> <label>" lines. Blank lines and lines
/// whose first non-blank character is '#' or '%' are skipped; "\r\n" endings
/// are accepted. Internal IDs follow first appearance.
ParsedEdgeList parse_edge_list(std::string_view text);

/// Reads and parses an edge-list file. I/O failures raise IoError naming the
/// path; malformed lines raise ParseError.
ParsedEdgeList load_edge_list(const std::filesystem::path& path);

/// Whole file as bytes; throws IoError.
std::string read_file(const std::filesystem::path& path);

inline constexpr std::int32_t kUnreachable = -1;

/// Hop distances from one source, restricted to the source's component.
struct DistanceField {
  NodeId source = 0;
  std::vector<std::int32_t> dist;
  std::int32_t d_max = 0;
  /// shell_counts[r] = number of nodes at exactly distance r, r = 0..d_max.
  std::vector<std::size_t> shell_counts;

  bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
  std::size_t component_size() const;
};

DistanceField bfs_distances(const Graph& g, NodeId source);

/// One BFS per node; sources are processed in parallel.
std::vector<DistanceField> all_distance_fields(const Graph& g, std::size_t threads = 0);

struct ComponentMap {
  std::vector<std::uint32_t> component_id;
  std::vector<std::size_t> component_sizes;
};

/// Components are numbered in order of their smallest internal ID.
ComponentMap connected_components(const Graph& g);

/// Largest finite eccentricity over all nodes; 0 for graphs without edges.
std::int32_t diameter(std::span<const DistanceField> fields);

}  // namespace fldrank
