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
#include <span>
#include <vector>

#include "fldrank/graph.hpp"
#include "fldrank/scores.hpp"

namespace fldrank {

/// Node-aligned pair of sequences: w holds centrality scores, v the
/// reference values (e.g. SI spreading ability).
struct PairedSequence {
  std::vector<double> w;
  std::vector<double> v;
};

struct TauResult {
  double tau = 0.0;
  std::uint64_t n_c = 0;  // concordant pairs
  std::uint64_t n_d = 0;  // discordant pairs
  std::uint64_t n = 0;
};

/// Kendall's tau-a: (n_c - n_d) / (n (n - 1) / 2). Pairs tied in either
/// coordinate count as neither concordant nor discordant but stay in the
/// denominator. O(n log n). Throws std::invalid_argument for n < 2,
/// mismatched lengths or non-finite values.
TauResult kendall_tau(const PairedSequence& p);

/// |top-k(a) ∩ top-k(b)| over node labels. Requires 1 <= k <= both sizes.
std::size_t top_k_overlap(const RankingList& a, const RankingList& b, std::size_t k);

/// Pairs defined scores with a reference vector. Ascending measures are
/// negated so that a larger paired value always means more influential.
PairedSequence orient_and_pair(const ScoreVector& sv, std::span<const double> reference);

struct SweepPoint {
  double lambda = 0.0;
  TauResult tau;
};

struct SweepOptions {
  std::int32_t t_eval = 10;
  std::size_t replicates = 100;
  std::uint64_t rng_seed = 1;
  std::size_t threads = 0;
};

/// lambda values start, start + step, ..., stop (inclusive within half a step).
std::vector<double> lambda_grid(double start, double stop, double step);

/// The default grid 0.01, 0.02, ..., 0.10.
std::vector<double> default_lambda_grid();

/// For each lambda: per-node SI spreading ability, then tau against `sv`.
std::vector<SweepPoint> tau_sweep(const Graph& g, const ScoreVector& sv,
                                  std::span<const double> lambdas, const SweepOptions& opts = {});

}  // namespace fldrank
