// Copyright 2026 The graphcanon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHCANON_NUMERICS_H_
#define GRAPHCANON_NUMERICS_H_

#include <cstdint>
#include <vector>

namespace graphcanon {

// P(X = k) for X ~ Bin(n, p). Evaluated in log space with the saddle-point
// split log b = stirlerr terms - bd0 terms - log(2 pi k (n-k) / n) / 2, which
// keeps ~1e-15 relative accuracy for n up to 1e7 and beyond. Throws
// ParameterError for k > n or p outside [0, 1].
double BinomialPmf(std::uint64_t k, std::uint64_t n, double p);

// log BinomialPmf, finite whenever the pmf is positive.
double LogBinomialPmf(std::uint64_t k, std::uint64_t n, double p);

struct PmfCheck {
  std::uint64_t n = 0;
  double p = 0.0;
  // max over the modes floor(np), ceil(np).
  double max_pmf = 0.0;
  // e^4 / sqrt(np)
  double bound = 0.0;
  bool satisfied = false;
};

// Requires np >= 2 and p <= 1/3; throws ParameterError otherwise.
PmfCheck CheckPmfBound(std::uint64_t n, double p);

// Cells of the validity grid: n in {1e2, ..., 1e7} times np in
// {2, 10, 1e2, 1e3, 1e4}, keeping only cells with p <= 1/3.
struct PmfGridCell {
  std::uint64_t n;
  double np;
};
std::vector<PmfGridCell> DefaultPmfGrid();

}  // namespace graphcanon

#endif  // GRAPHCANON_NUMERICS_H_
