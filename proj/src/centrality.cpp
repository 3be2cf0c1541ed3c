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

#include "fldrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fldrank/parallel.hpp"
#include "fldrank/regression.hpp"

namespace fldrank {

ScoreVector degree_centrality(const Graph& g) {
  auto sv = make_score_vector(Measure::DC, g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) sv.scores[v] = static_cast<double>(g.degree(v));
  return sv;
}

ScoreVector closeness_centrality(const Graph& g, std::span<const DistanceField> fields) {
  auto sv = make_score_vector(Measure::CC, g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& f = fields[v];
    std::size_t total = 0;
    for (std::size_t r = 1; r < f.shell_counts.size(); ++r) total += r * f.shell_counts[r];
    if (total == 0) {
      sv.undefined[v] = 1;
      continue;
    }
    sv.scores[v] = 1.0 / static_cast<double>(total);
  }
  return sv;
}

namespace {

struct SourceScratch {
  std::vector<std::int32_t> dist;
  std::vector<PathCount> sigma;
  std::vector<PathCount> below;
  std::vector<NodeId> order;
};

// Adds the contribution of every shortest path starting at `s`.
void accumulate_from_source(const Graph& g, NodeId s, SourceScratch& w,
                            std::vector<PathCount>& through, PathCount& total) {
  std::fill(w.dist.begin(), w.dist.end(), kUnreachable);
  std::fill(w.sigma.begin(), w.sigma.end(), PathCount{0});
  std::fill(w.below.begin(), w.below.end(), PathCount{0});
  w.order.clear();

  w.dist[s] = 0;
  w.sigma[s] = 1;
  w.order.push_back(s);
  for (std::size_t head = 0; head < w.order.size(); ++head) {
    const NodeId v = w.order[head];
    for (NodeId u : g.neighbors(v)) {
      if (w.dist[u] == kUnreachable) {
        w.dist[u] = w.dist[v] + 1;
        w.order.push_back(u);
      }
      if (w.dist[u] == w.dist[v] + 1) w.sigma[u] += w.sigma[v];
    }
  }

  // below[v]: shortest-path continuations from v to every deeper target.
  for (auto it = w.order.rbegin(); it != w.order.rend(); ++it) {
    const NodeId u = *it;
    for (NodeId v : g.neighbors(u)) {
      if (w.dist[v] == w.dist[u] - 1) w.below[v] += 1 + w.below[u];
    }
    if (u != s) {
      through[u] += w.sigma[u] * w.below[u];
      total += w.sigma[u];
    }
  }
}

}  // namespace

BetweennessCounts betweenness_counts(const Graph& g, std::size_t threads) {
  const std::size_t n = g.node_count();
  BetweennessCounts counts;
  counts.through.assign(n, PathCount{0});
  if (n == 0) return counts;

  const std::size_t workers = std::min(resolve_threads(threads), n);
  std::vector<std::vector<PathCount>> partial(workers, std::vector<PathCount>(n, PathCount{0}));
  std::vector<PathCount> partial_total(workers, PathCount{0});
  const std::size_t chunk = (n + workers - 1) / workers;

  parallel_for(workers, workers, [&](std::size_t w) {
    SourceScratch scratch{std::vector<std::int32_t>(n), std::vector<PathCount>(n),
                          std::vector<PathCount>(n), {}};
    const std::size_t end = std::min(n, (w + 1) * chunk);
    for (std::size_t s = w * chunk; s < end; ++s) {
      accumulate_from_source(g, static_cast<NodeId>(s), scratch, partial[w], partial_total[w]);
    }
  });

  // Integer sums, so the result does not depend on the partition.
  for (std::size_t w = 0; w < workers; ++w) {
    for (std::size_t v = 0; v < n; ++v) counts.through[v] += partial[w][v];
    counts.total_paths += partial_total[w];
  }
  return counts;
}

ScoreVector betweenness_centrality(const Graph& g, std::size_t threads) {
  auto sv = make_score_vector(Measure::BC, g.node_count());
  if (g.node_count() < 3) return sv;
  const auto counts = betweenness_counts(g, threads);
  if (counts.total_paths == 0) return sv;
  const auto denom = static_cast<long double>(counts.total_paths);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    sv.scores[v] = static_cast<double>(static_cast<long double>(counts.through[v]) / denom);
  }
  return sv;
}

EigenvectorResult eigenvector_centrality(const Graph& g, const EigenvectorOptions& opts) {
  const std::size_t n = g.node_count();
  EigenvectorResult result;
  result.scores = make_score_vector(Measure::EC, n);
  std::fill(result.scores.undefined.begin(), result.scores.undefined.end(), 1);
  if (g.edge_count() == 0) return result;

  const auto comps = connected_components(g);
  const auto largest = static_cast<std::uint32_t>(
      std::max_element(comps.component_sizes.begin(), comps.component_sizes.end()) -
      comps.component_sizes.begin());
  std::vector<NodeId> members;
  for (NodeId v = 0; v < n; ++v) {
    if (comps.component_id[v] == largest) members.push_back(v);
  }

  std::vector<double> x(n, 0.0), y(n, 0.0);
  const double start = 1.0 / std::sqrt(static_cast<double>(members.size()));
  for (NodeId v : members) x[v] = start;

  auto apply_adjacency = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (NodeId v : members) {
      double acc = 0.0;
      for (NodeId u : g.neighbors(v)) acc += in[u];
      out[v] = acc;
    }
  };

  bool converged = false;
  int iter = 0;
  while (iter < opts.max_iterations) {
    ++iter;
    apply_adjacency(x, y);
    double norm = 0.0;
    for (NodeId v : members) {
      y[v] += x[v];  // shift: iterate on A + I
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    double change = 0.0;
    for (NodeId v : members) {
      y[v] /= norm;
      change = std::max(change, std::abs(y[v] - x[v]));
    }
    std::swap(x, y);
    if (change < opts.tolerance) {
      converged = true;
      break;
    }
  }

  apply_adjacency(x, y);
  double lambda = 0.0;
  for (NodeId v : members) lambda += x[v] * y[v];
  double residual = 0.0;
  for (NodeId v : members) {
    const double r = y[v] - lambda * x[v];
    residual += r * r;
  }
  residual = std::sqrt(residual);
  if (!converged) throw ConvergenceError(iter, residual);

  for (NodeId v : members) {
    result.scores.scores[v] = x[v];
    result.scores.undefined[v] = 0;
  }
  result.eigenvalue = lambda;
  result.residual = residual;
  result.iterations = iter;
  return result;
}

ScoreVector local_dimension(const Graph& g, std::span<const DistanceField> fields) {
  auto sv = make_score_vector(Measure::LD, g.node_count());
  std::vector<double> x, y;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& f = fields[v];
    if (f.d_max < 2) {
      sv.undefined[v] = 1;
      continue;
    }
    x.clear();
    y.clear();
    std::size_t within = f.shell_counts[0];
    for (std::int32_t r = 1; r <= f.d_max; ++r) {
      within += f.shell_counts[r];
      x.push_back(std::log(static_cast<double>(r)));
      y.push_back(std::log(static_cast<double>(within)));
    }
    sv.scores[v] = ols_fit(x, y).slope;
  }
  return sv;
}

}  // namespace fldrank
