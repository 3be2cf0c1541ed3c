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

#include "fldrank/measures.hpp"

#include "fldrank/centrality.hpp"
#include "fldrank/fld.hpp"

namespace fldrank {

ScoreVector compute_measure(const Graph& g, Measure m, std::span<const DistanceField> fields,
                            std::size_t threads) {
  switch (m) {
    case Measure::DC: return degree_centrality(g);
    case Measure::CC: return closeness_centrality(g, fields);
    case Measure::BC: return betweenness_centrality(g, threads);
    case Measure::EC: return eigenvector_centrality(g).scores;
    case Measure::LD: return local_dimension(g, fields);
    case Measure::FLD: return fuzzy_local_dimension(g, fields, {}, threads);
  }
  return make_score_vector(m, g.node_count());
}

}  // namespace fldrank
