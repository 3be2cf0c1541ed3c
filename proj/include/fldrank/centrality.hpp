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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fldrank/graph.hpp"
#include "fldrank/scores.hpp"

namespace fldrank {

/// Exact shortest-path counts. 128 bits keeps sums over all ordered pairs
/// exact on graphs with thousands of nodes.
using PathCount = unsigned __int128;

/// Degree of each node.
ScoreVector degree_centrality(const Graph& g);

/// 1 / (sum of hop distances to the rest of the node's component). Nodes in
/// singleton components are undefined.
ScoreVector closeness_centrality(const Graph& g, std::span<const DistanceField> fields);

/// Integer numerator and denominator of betweenness, summed over ordered
/// pairs (s, t) with s != t in one component:
///   through[i]  = number of shortest s-t paths with i as an interior node
///   total_paths = number of shortest s-t paths
struct BetweennessCounts {
  std::vector<PathCount> through;
  PathCount total_paths = 0;
};

/// Numerators by dependency accumulation over each source's BFS DAG.
BetweennessCounts betweenness_counts(const Graph& g, std::size_t threads = 0);

/// through[i] / total_paths. Graphs with fewer than 3 nodes score 0 everywhere.
ScoreVector betweenness_centrality(const Graph& g, std::size_t threads = 0);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int iterations, double residual)
      : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                           " iterations (residual " + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

struct EigenvectorOptions {
  double tolerance = 1e-12;  // infinity-norm change between iterates
  int max_iterations = 10000;
};

struct EigenvectorResult {
  ScoreVector scores;
  double eigenvalue = 0.0;
  double residual = 0.0;  // ||A x - lambda x||_2 on the largest component
  int iterations = 0;
};

/// Principal adjacency eigenvector of the largest component (ties go to the
/// component holding the smallest internal ID), unit L2 norm, non-negative.
/// Iterates on A + I so bipartite components do not oscillate. Nodes outside
/// that component, or every node of an edgeless graph, are undefined.
EigenvectorResult eigenvector_centrality(const Graph& g, const EigenvectorOptions& opts = {});

/// Slope of ln B_i(r) against ln r for r = 1..d_max, where B_i(r) counts nodes
/// within distance r including i. Nodes with d_max < 2 are undefined.
/// Ranked ascending: the smaller slope is the more important node.
ScoreVector local_dimension(const Graph& g, std::span<const DistanceField> fields);

}  // namespace fldrank
