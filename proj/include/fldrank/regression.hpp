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

#include <span>

namespace fldrank {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Unweighted least-squares line y = slope * x + intercept, using the centered
/// form slope = sum((x - mx)(y - my)) / sum((x - mx)^2). Requires at least two
/// distinct x values.
LineFit ols_fit(std::span<const double> x, std::span<const double> y);

}  // namespace fldrank
