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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fldrank/graph.hpp"

namespace fldrank {

/// lambda = (1/2)^beta.
double lambda_from_beta(double beta);

/// Counter-based uniform variates for one SI replicate. Every (step, target,
/// source) contact maps to a fixed draw, so a replicate can be replayed in
/// isolation and runs at different lambda share their random numbers.
class ContactStream {
 public:
  explicit ContactStream(std::uint64_t key) : key_(key) {}

  /// Substream for replicate `replicate` of a campaign seeded with `master`.
  static ContactStream for_replicate(std::uint64_t master, std::uint64_t replicate);

  /// Uniform in [0, 1) for the contact source -> target at `step`.
  double uniform(std::uint64_t step, NodeId target, NodeId source) const;

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

/// One synchronous SI update. Each susceptible node draws once per infected
/// neighbour and becomes infected if any draw falls below lambda. `infected`
/// is a 0/1 mask over nodes and is not modified. Returns the newly infected
/// nodes in ascending ID order.
std::vector<NodeId> si_step(const Graph& g, std::span<const std::uint8_t> infected, double lambda,
                            const ContactStream& stream, std::uint64_t step);

struct SiConfig {
  double lambda = 0.0;
  std::vector<NodeId> seeds;
  /// Defaults to 10 x graph diameter when unset.
  std::optional<std::int32_t> max_steps;
  std::size_t replicates = 1;
  std::uint64_t rng_seed = 0;
  bool keep_trajectories = false;
  std::size_t threads = 0;
};

struct SiTrajectory {
  std::vector<std::size_t> infected;     // F(t), t = 0..terminated_at
  std::vector<std::size_t> susceptible;  // S(t)
  std::int32_t terminated_at = 0;
};

struct TrajectoryEnsemble {
  std::vector<double> mean;    // mean F(t) over replicates
  std::vector<double> stddev;  // sample standard deviation of F(t)
  std::size_t replicates = 0;
  std::int32_t max_steps = 0;
  std::vector<SiTrajectory> runs;  // filled when keep_trajectories is set
};

/// Runs one replicate until no susceptible node borders an infected one (or
/// lambda is 0), or until max_steps updates have been applied.
SiTrajectory run_si(const Graph& g, std::span<const NodeId> seeds, double lambda,
                    std::int32_t max_steps, const ContactStream& stream);

/// Replicate k uses ContactStream::for_replicate(cfg.rng_seed, k). Shorter
/// trajectories are padded with their final value before averaging.
TrajectoryEnsemble simulate(const Graph& g, const SiConfig& cfg);

/// Mean F(t_eval) over `replicates` runs seeded with `node` alone.
double spreading_ability(const Graph& g, NodeId node, double lambda, std::int32_t t_eval,
                         std::size_t replicates, std::uint64_t rng_seed, std::size_t threads = 0);

/// spreading_ability for every node. Node v's campaign seed is derived from
/// (rng_seed, v).
std::vector<double> spreading_abilities(const Graph& g, double lambda, std::int32_t t_eval,
                                        std::size_t replicates, std::uint64_t rng_seed,
                                        std::size_t threads = 0);

/// Maps external labels to IDs; throws std::invalid_argument naming the first
/// label that is not in the graph.
std::vector<NodeId> resolve_labels(const Graph& g, std::span<const std::string> labels);

}  // namespace fldrank
