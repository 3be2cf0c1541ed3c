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

#include "fldrank/si.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fldrank/parallel.hpp"

namespace fldrank {

namespace {

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t node_campaign_seed(std::uint64_t master, NodeId v) {
  return mix64(mix64(master) ^ (0xa0761d6478bd642fULL * (static_cast<std::uint64_t>(v) + 1)));
}

void validate(const Graph& g, std::span<const NodeId> seeds, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("infection probability must lie in [0, 1]");
  }
  if (seeds.empty()) throw std::invalid_argument("at least one seed node is required");
  for (NodeId s : seeds) {
    if (s >= g.node_count()) {
      throw std::invalid_argument("seed node " + std::to_string(s) + " is not in the graph");
    }
  }
}

bool has_frontier(const Graph& g, std::span<const std::uint8_t> infected) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (infected[u]) continue;
    for (NodeId w : g.neighbors(u)) {
      if (infected[w]) return true;
    }
  }
  return false;
}

}  // namespace

double lambda_from_beta(double beta) { return std::pow(0.5, beta); }

ContactStream ContactStream::for_replicate(std::uint64_t master, std::uint64_t replicate) {
  return ContactStream(mix64(mix64(master) + replicate));
}

double ContactStream::uniform(std::uint64_t step, NodeId target, NodeId source) const {
  const std::uint64_t contact = (static_cast<std::uint64_t>(target) << 32) | source;
  const std::uint64_t h = mix64(key_ ^ mix64(step ^ mix64(contact)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::vector<NodeId> si_step(const Graph& g, std::span<const std::uint8_t> infected, double lambda,
                            const ContactStream& stream, std::uint64_t step) {
  std::vector<NodeId> fresh;
  if (lambda <= 0.0) return fresh;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (infected[u]) continue;
    for (NodeId w : g.neighbors(u)) {
      if (infected[w] && stream.uniform(step, u, w) < lambda) {
        fresh.push_back(u);
        break;
      }
    }
  }
  return fresh;
}

SiTrajectory run_si(const Graph& g, std::span<const NodeId> seeds, double lambda,
                    std::int32_t max_steps, const ContactStream& stream) {
  validate(g, seeds, lambda);
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> infected(n, 0);
  for (NodeId s : seeds) infected[s] = 1;

  auto record = [&](SiTrajectory& traj) {
    const auto count = static_cast<std::size_t>(std::count(infected.begin(), infected.end(), 1));
    traj.infected.push_back(count);
    traj.susceptible.push_back(static_cast<std::size_t>(std::count(infected.begin(), infected.end(), 0)));
  };

  SiTrajectory traj;
  record(traj);
  std::int32_t t = 0;
  while (t < max_steps && lambda > 0.0 && has_frontier(g, infected)) {
    for (NodeId v : si_step(g, infected, lambda, stream, static_cast<std::uint64_t>(t))) {
      infected[v] = 1;
    }
    ++t;
    record(traj);
  }
  traj.terminated_at = t;
  return traj;
}

TrajectoryEnsemble simulate(const Graph& g, const SiConfig& cfg) {
  validate(g, cfg.seeds, cfg.lambda);
  if (cfg.replicates == 0) throw std::invalid_argument("replicates must be at least 1");

  std::int32_t max_steps = 0;
  if (cfg.max_steps) {
    if (*cfg.max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
    max_steps = *cfg.max_steps;
  } else {
    max_steps = 10 * diameter(all_distance_fields(g, cfg.threads));
  }

  std::vector<SiTrajectory> runs(cfg.replicates);
  parallel_for(cfg.replicates, cfg.threads, [&](std::size_t k) {
    runs[k] = run_si(g, cfg.seeds, cfg.lambda, max_steps, ContactStream::for_replicate(cfg.rng_seed, k));
  });

  std::size_t length = 0;
  for (const auto& r : runs) length = std::max(length, r.infected.size());

  TrajectoryEnsemble ens;
  ens.replicates = cfg.replicates;
  ens.max_steps = max_steps;
  ens.mean.assign(length, 0.0);
  ens.stddev.assign(length, 0.0);
  const double reps = static_cast<double>(cfg.replicates);
  for (std::size_t t = 0; t < length; ++t) {
    double sum = 0.0;
    for (const auto& r : runs) sum += static_cast<double>(r.infected[std::min(t, r.infected.size() - 1)]);
    const double mean = sum / reps;
    double ss = 0.0;
    for (const auto& r : runs) {
      const double d = static_cast<double>(r.infected[std::min(t, r.infected.size() - 1)]) - mean;
      ss += d * d;
    }
    ens.mean[t] = mean;
    ens.stddev[t] = cfg.replicates > 1 ? std::sqrt(ss / (reps - 1.0)) : 0.0;
  }
  if (cfg.keep_trajectories) ens.runs = std::move(runs);
  return ens;
}

namespace {

double node_spreading(const Graph& g, NodeId node, double lambda, std::int32_t t_eval,
                      std::size_t replicates, std::uint64_t rng_seed, std::size_t threads) {
  const std::uint64_t campaign = node_campaign_seed(rng_seed, node);
  const NodeId seeds[] = {node};
  std::vector<double> finals(replicates, 0.0);
  parallel_for(replicates, threads, [&](std::size_t k) {
    const auto traj = run_si(g, seeds, lambda, t_eval, ContactStream::for_replicate(campaign, k));
    finals[k] = static_cast<double>(traj.infected.back());
  });
  double sum = 0.0;
  for (double f : finals) sum += f;
  return sum / static_cast<double>(replicates);
}

void check_evaluation(std::int32_t t_eval, std::size_t replicates) {
  if (t_eval < 1) throw std::invalid_argument("t_eval must be at least 1");
  if (replicates == 0) throw std::invalid_argument("replicates must be at least 1");
}

}  // namespace

double spreading_ability(const Graph& g, NodeId node, double lambda, std::int32_t t_eval,
                         std::size_t replicates, std::uint64_t rng_seed, std::size_t threads) {
  check_evaluation(t_eval, replicates);
  const NodeId seeds[] = {node};
  validate(g, seeds, lambda);
  return node_spreading(g, node, lambda, t_eval, replicates, rng_seed, threads);
}

std::vector<double> spreading_abilities(const Graph& g, double lambda, std::int32_t t_eval,
                                        std::size_t replicates, std::uint64_t rng_seed,
                                        std::size_t threads) {
  check_evaluation(t_eval, replicates);
  std::vector<double> out(g.node_count(), 0.0);
  if (g.node_count() == 0) return out;
  const NodeId probe[] = {0};
  validate(g, probe, lambda);
  parallel_for(g.node_count(), threads, [&](std::size_t v) {
    out[v] = node_spreading(g, static_cast<NodeId>(v), lambda, t_eval, replicates, rng_seed, 1);
  });
  return out;
}

std::vector<NodeId> resolve_labels(const Graph& g, std::span<const std::string> labels) {
  std::vector<NodeId> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) {
    auto id = g.find(label);
    if (!id) throw std::invalid_argument("node '" + label + "' is not in the graph");
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace fldrank
