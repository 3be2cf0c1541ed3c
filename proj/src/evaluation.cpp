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

#include "fldrank/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "fldrank/si.hpp"

namespace fldrank {

namespace {

std::uint64_t pairs_of(std::uint64_t c) { return c * (c - 1) / 2; }

// Sorts `idx` by v (stable) and returns the number of strict inversions.
std::uint64_t merge_count(std::vector<std::size_t>& idx, std::vector<std::size_t>& buf,
                          const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(idx, buf, v, lo, mid) + merge_count(idx, buf, v, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (v[idx[j]] < v[idx[i]]) {
      inv += mid - i;
      buf[out++] = idx[j++];
    } else {
      buf[out++] = idx[i++];
    }
  }
  while (i < mid) buf[out++] = idx[i++];
  while (j < hi) buf[out++] = idx[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, idx.begin() + lo);
  return inv;
}

}  // namespace

TauResult kendall_tau(const PairedSequence& p) {
  if (p.w.size() != p.v.size()) throw std::invalid_argument("kendall_tau: length mismatch");
  if (p.w.size() < 2) throw std::invalid_argument("kendall_tau: need at least two pairs");
  for (std::size_t i = 0; i < p.w.size(); ++i) {
    if (!std::isfinite(p.w[i]) || !std::isfinite(p.v[i])) {
      throw std::invalid_argument("kendall_tau: non-finite value");
    }
  }

  const std::size_t n = p.w.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (p.w[a] != p.w[b]) return p.w[a] < p.w[b];
    return p.v[a] < p.v[b];
  });

  std::uint64_t tied_w = 0, tied_both = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && p.w[idx[j]] == p.w[idx[i]]) ++j;
    tied_w += pairs_of(j - i);
    for (std::size_t k = i; k < j;) {
      std::size_t m = k;
      while (m < j && p.v[idx[m]] == p.v[idx[k]]) ++m;
      tied_both += pairs_of(m - k);
      k = m;
    }
    i = j;
  }

  std::vector<std::size_t> buf(n);
  const std::uint64_t discordant = merge_count(idx, buf, p.v, 0, n);

  std::uint64_t tied_v = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && p.v[idx[j]] == p.v[idx[i]]) ++j;
    tied_v += pairs_of(j - i);
    i = j;
  }

  TauResult r;
  r.n = n;
  const std::uint64_t total = pairs_of(n);
  r.n_d = discordant;
  r.n_c = total - tied_w - tied_v + tied_both - discordant;
  r.tau = (static_cast<double>(r.n_c) - static_cast<double>(r.n_d)) /
          (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
  return r;
}

std::size_t top_k_overlap(const RankingList& a, const RankingList& b, std::size_t k) {
  if (k == 0) throw std::invalid_argument("top_k_overlap: k must be positive");
  if (k > a.size() || k > b.size()) {
    throw std::invalid_argument("top_k_overlap: k exceeds ranking length");
  }
  std::unordered_set<std::string> head;
  for (std::size_t i = 0; i < k; ++i) head.insert(a.entries[i].label);
  std::size_t shared = 0;
  for (std::size_t i = 0; i < k; ++i) shared += head.count(b.entries[i].label);
  return shared;
}

PairedSequence orient_and_pair(const ScoreVector& sv, std::span<const double> reference) {
  if (reference.size() != sv.size()) throw std::invalid_argument("reference length mismatch");
  const double sign = sv.direction == SortDirection::Ascending ? -1.0 : 1.0;
  PairedSequence p;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (sv.undefined[i]) continue;
    p.w.push_back(sign * sv.scores[i]);
    p.v.push_back(reference[i]);
  }
  return p;
}

std::vector<double> lambda_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("lambda step must be positive");
  if (!(start > 0.0) || !(stop <= 1.0) || stop < start) {
    throw std::invalid_argument("lambda range must satisfy 0 < start <= stop <= 1");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

std::vector<double> default_lambda_grid() { return lambda_grid(0.01, 0.10, 0.01); }

std::vector<SweepPoint> tau_sweep(const Graph& g, const ScoreVector& sv,
                                  std::span<const double> lambdas, const SweepOptions& opts) {
  if (lambdas.empty()) throw std::invalid_argument("tau_sweep: empty lambda grid");
  for (double l : lambdas) {
    if (!(l > 0.0 && l <= 1.0)) throw std::invalid_argument("tau_sweep: lambda outside (0, 1]");
  }
  std::vector<SweepPoint> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) {
    const auto ability =
        spreading_abilities(g, l, opts.t_eval, opts.replicates, opts.rng_seed, opts.threads);
    out.push_back({l, kendall_tau(orient_and_pair(sv, ability))});
  }
  return out;
}

}  // namespace fldrank
