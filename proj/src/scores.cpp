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

#include "fldrank/scores.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace fldrank {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::DC: return "dc";
    case Measure::CC: return "cc";
    case Measure::BC: return "bc";
    case Measure::EC: return "ec";
    case Measure::LD: return "ld";
    case Measure::FLD: return "fld";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

SortDirection default_direction(Measure m) {
  // Smaller local dimension marks the more important node.
  return m == Measure::LD ? SortDirection::Ascending : SortDirection::Descending;
}

ScoreVector make_score_vector(Measure m, std::size_t n) {
  ScoreVector sv;
  sv.measure = m;
  sv.direction = default_direction(m);
  sv.scores.assign(n, 0.0);
  sv.undefined.assign(n, 0);
  return sv;
}

std::vector<std::string> RankingList::labels() const { return top_labels(entries.size()); }

std::vector<std::string> RankingList::top_labels(std::size_t k) const {
  std::vector<std::string> out;
  k = std::min(k, entries.size());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(entries[i].label);
  return out;
}

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;  // "07" vs "7"
  }
  if (ia.has_value() != ib.has_value()) return ia.has_value();
  return a < b;
}

RankingList rank(const ScoreVector& sv, const Graph& g) {
  const std::size_t n = sv.size();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  const bool ascending = sv.direction == SortDirection::Ascending;

  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const bool ua = sv.undefined[a] != 0;
    const bool ub = sv.undefined[b] != 0;
    if (ua != ub) return ub;
    if (!ua && sv.scores[a] != sv.scores[b]) {
      return ascending ? sv.scores[a] < sv.scores[b] : sv.scores[a] > sv.scores[b];
    }
    return label_less(g.label(a), g.label(b));
  });

  RankingList list;
  list.measure = sv.measure;
  list.entries.reserve(n);
  for (NodeId v : order) {
    list.entries.push_back({v, g.label(v), sv.scores[v], sv.undefined[v] != 0});
  }
  return list;
}

}  // namespace fldrank
