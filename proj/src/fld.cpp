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

#include "fldrank/fld.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fldrank/parallel.hpp"
#include "fldrank/regression.hpp"

namespace fldrank {

double membership(double distance, double eps) {
  if (!(distance >= 0.0) || !std::isfinite(distance)) {
    throw std::invalid_argument("membership: distance must be finite and non-negative");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("membership: box size must be positive");
  return std::exp(-(distance * distance) / (eps * eps));
}

FuzzyCount fuzzy_count(const DistanceField& field, std::int32_t radius,
                       const MembershipParams& params) {
  if (radius < 1 || radius > field.d_max) {
    throw std::out_of_range("fuzzy_count: radius " + std::to_string(radius) +
                            " outside [1, " + std::to_string(field.d_max) + "]");
  }
  const double eps = params.eps_for(radius);
  // Summing shell by shell keeps nodes with equal shell profiles bit-identical.
  double weight = 0.0;
  std::size_t real = 0;
  for (std::int32_t d = 0; d <= radius; ++d) {
    const auto shell = field.shell_counts[d];
    weight += static_cast<double>(shell) * membership(d, eps);
    real += shell;
  }
  return {weight / static_cast<double>(real), real};
}

FuzzyCountSeries fuzzy_count_series(const DistanceField& field, const MembershipParams& params) {
  FuzzyCountSeries series;
  series.center = field.source;
  for (std::int32_t r = 1; r <= field.d_max; ++r) {
    const auto c = fuzzy_count(field, r, params);
    series.radii.push_back(r);
    series.counts.push_back(c.fuzzy);
    series.real_counts.push_back(c.real);
  }
  return series;
}

ScoreVector fuzzy_local_dimension(const Graph& g, std::span<const DistanceField> fields,
                                  const MembershipParams& params, std::size_t threads) {
  if (params.fixed_eps && !(*params.fixed_eps > 0.0)) {
    throw std::invalid_argument("fixed box size must be positive");
  }
  auto sv = make_score_vector(Measure::FLD, g.node_count());
  parallel_for(g.node_count(), threads, [&](std::size_t i) {
    const auto& f = fields[i];
    if (f.d_max < 2) {
      sv.undefined[i] = 1;
      return;
    }
    const auto series = fuzzy_count_series(f, params);
    std::vector<double> x, y;
    x.reserve(series.radii.size());
    y.reserve(series.radii.size());
    for (std::size_t t = 0; t < series.radii.size(); ++t) {
      x.push_back(std::log(static_cast<double>(series.radii[t])));
      y.push_back(std::log(series.counts[t]));
    }
    sv.scores[i] = ols_fit(x, y).slope;
  });
  return sv;
}

}  // namespace fldrank
