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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fldrank/graph.hpp"

namespace fldrank {

enum class Measure { DC, CC, BC, EC, LD, FLD };

inline constexpr std::array<Measure, 6> kAllMeasures = {Measure::DC, Measure::CC, Measure::BC,
                                                        Measure::EC, Measure::LD, Measure::FLD};

/// Which end of the score axis is "most influential".
enum class SortDirection { Descending, Ascending };

/// Lower-case short name ("dc", "fld", ...).
std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
SortDirection default_direction(Measure m);

/// Per-node scores for one measure. Undefined nodes keep a finite sentinel
/// (0) in `scores` and are flagged in `undefined`.
struct ScoreVector {
  Measure measure = Measure::DC;
  SortDirection direction = SortDirection::Descending;
  std::vector<double> scores;
  std::vector<std::uint8_t> undefined;

  std::size_t size() const noexcept { return scores.size(); }
  bool is_defined(NodeId v) const { return undefined[v] == 0; }
};

ScoreVector make_score_vector(Measure m, std::size_t n);

struct RankedNode {
  NodeId id;
  std::string label;
  double score;
  bool undefined;
};

/// Total order over all nodes, most influential first. Undefined nodes follow
/// every defined node.
struct RankingList {
  Measure measure = Measure::DC;
  std::vector<RankedNode> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<std::string> labels() const;
  std::vector<std::string> top_labels(std::size_t k) const;
};

/// Strict order on external labels: integer labels compare numerically and
/// sort before non-integer labels; everything else compares bytewise.
bool label_less(std::string_view a, std::string_view b);

RankingList rank(const ScoreVector& sv, const Graph& g);

}  // namespace fldrank
