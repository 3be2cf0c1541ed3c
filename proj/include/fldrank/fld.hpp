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
#include <vector>

#include "fldrank/graph.hpp"
#include "fldrank/scores.hpp"

namespace fldrank {

/// Gaussian membership exp(-d^2 / eps^2) of a node at hop distance d inside a
/// box of size eps. Throws std::invalid_argument for d < 0 (unreachable) or
/// eps <= 0.
double membership(double distance, double eps);

/// By default the box size tracks the radius (eps = r). `fixed_eps` pins it
/// to one value for every radius instead.
struct MembershipParams {
  std::optional<double> fixed_eps;

  double eps_for(std::int32_t radius) const {
    return fixed_eps ? *fixed_eps : static_cast<double>(radius);
  }
};

struct FuzzyCount {
  double fuzzy = 0.0;     // mean membership over nodes within the radius
  std::size_t real = 0;   // nodes within the radius, centre included
};

/// Fuzzy node count of the ball of radius r around field.source.
/// Requires 1 <= r <= field.d_max.
FuzzyCount fuzzy_count(const DistanceField& field, std::int32_t radius,
                       const MembershipParams& params = {});

struct FuzzyCountSeries {
  NodeId center = 0;
  std::vector<std::int32_t> radii;       // 1..d_max
  std::vector<double> counts;            // fuzzy counts, in (0, 1]
  std::vector<std::size_t> real_counts;  // strictly increasing
};

FuzzyCountSeries fuzzy_count_series(const DistanceField& field,
                                    const MembershipParams& params = {});

/// Fuzzy local dimension of every node: slope of ln N_i(r) against ln r over
/// r = 1..d_max. Larger is more influential and negative values are allowed.
/// Nodes with d_max < 2 score 0 and are flagged undefined.
ScoreVector fuzzy_local_dimension(const Graph& g, std::span<const DistanceField> fields,
                                  const MembershipParams& params = {}, std::size_t threads = 0);

}  // namespace fldrank
