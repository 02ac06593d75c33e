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

#include "graphcanon/numerics.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphcanon/errors.h"

namespace graphcanon {
namespace {

// ln(k!) - ln(sqrt(2 pi k) (k/e)^k) for k = 0..15.
constexpr double kStirlingErrorTable[16] = {
    0.0,
    0.08106146679532725822,
    0.041340695955409294094,
    0.027677925684998339149,
    0.020790672103765093112,
    0.016644691189821192163,
    0.013876128823070747999,
    0.011896709945891770095,
    0.010411265261972096497,
    0.0092554621827127329177,
    0.0083305634333628712565,
    0.007573675487951840795,
    0.0069428401072095298657,
    0.0064089941880042070684,
    0.0059513701127588477356,
    0.005554733551962801371,
};

double StirlingError(double k) {
  if (k <= 15.0) return kStirlingErrorTable[static_cast<int>(k)];
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double kk = k * k;
  if (k > 500) return (s0 - s1 / kk) / k;
  if (k > 80) return (s0 - (s1 - s2 / kk) / kk) / k;
  if (k > 35) return (s0 - (s1 - (s2 - s3 / kk) / kk) / kk) / k;
  return (s0 - (s1 - (s2 - (s3 - s4 / kk) / kk) / kk) / kk) / k;
}

// x ln(x / mu) + mu - x without cancellation when x is close to mu.
double DevianceTerm(double x, double mu) {
  if (std::abs(x - mu) < 0.1 * (x + mu)) {
    double v = (x - mu) / (x + mu);
    double s = (x - mu) * v;
    double ej = 2.0 * x * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / mu) + mu - x;
}

}  // namespace

double LogBinomialPmf(std::uint64_t k, std::uint64_t n, double p) {
  if (k > n) {
    throw ParameterError("binomial pmf needs k <= n, got k = " +
                         std::to_string(k) + ", n = " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("binomial pmf needs p in [0, 1]");
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double q = 1.0 - p;
  const double x = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (q == 0.0) return k == n ? 0.0 : kNegInf;
  if (k == 0) {
    if (n == 0) return 0.0;
    return p < 0.1 ? -DevianceTerm(nn, nn * q) - nn * p : nn * std::log(q);
  }
  if (k == n) {
    return q < 0.1 ? -DevianceTerm(nn, nn * p) - nn * q : nn * std::log(p);
  }
  const double lc = StirlingError(nn) - StirlingError(x) -
                    StirlingError(nn - x) - DevianceTerm(x, nn * p) -
                    DevianceTerm(nn - x, nn * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(x) +
                    std::log1p(-x / nn);
  return lc - 0.5 * lf;
}

double BinomialPmf(std::uint64_t k, std::uint64_t n, double p) {
  return std::exp(LogBinomialPmf(k, n, p));
}

PmfCheck CheckPmfBound(std::uint64_t n, double p) {
  const double np = static_cast<double>(n) * p;
  // np = 2 and p = 1/3 are admissible; allow for their rounding.
  if (!(np >= 2.0 * (1.0 - 1e-12))) {
    throw ParameterError("pmf bound requires np >= 2, got np = " +
                         std::to_string(np));
  }
  if (!(p <= 1.0 / 3.0 * (1.0 + 1e-12)) || p < 0.0) {
    throw ParameterError("pmf bound requires p <= 1/3, got p = " +
                         std::to_string(p));
  }
  PmfCheck check;
  check.n = n;
  check.p = p;
  const auto lo = static_cast<std::uint64_t>(std::floor(np));
  const auto hi = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(std::ceil(np)));
  check.max_pmf = std::max(BinomialPmf(std::min(lo, n), n, p), BinomialPmf(hi, n, p));
  check.bound = std::exp(4.0) / std::sqrt(np);
  check.satisfied = check.max_pmf <= check.bound;
  return check;
}

std::vector<PmfGridCell> DefaultPmfGrid() {
  std::vector<PmfGridCell> cells;
  for (std::uint64_t n = 100; n <= 10'000'000; n *= 10) {
    for (double np : {2.0, 10.0, 1e2, 1e3, 1e4}) {
      if (np / static_cast<double>(n) <= 1.0 / 3.0) cells.push_back({n, np});
    }
  }
  return cells;
}

}  // namespace graphcanon
