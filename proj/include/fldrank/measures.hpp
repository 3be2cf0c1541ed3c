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

#include "fldrank/graph.hpp"
#include "fldrank/scores.hpp"

namespace fldrank {

/// Computes one measure with its default settings. `fields` must hold one
/// DistanceField per node, in node order (see all_distance_fields).
ScoreVector compute_measure(const Graph& g, Measure m, std::span<const DistanceField> fields,
                            std::size_t threads = 0);

}  // namespace fldrank
