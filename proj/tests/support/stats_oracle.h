// Copyright 2026 The Stylolab Authors.
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


// Reference computations that share no code with the stats module: the
// t-test p-value by direct quadrature of the t density, and Cohen's d from
// raw samples in long double.

#ifndef STYLOLAB_TESTS_SUPPORT_STATS_ORACLE_H_
#define STYLOLAB_TESTS_SUPPORT_STATS_ORACLE_H_

#include <cmath>
#include <span>

namespace stylolab::testing {

inline long double TDensity(long double x, long double df) {
  const long double log_c = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) -
                            0.5L * std::log(df * 3.14159265358979323846264338L);
  return std::exp(log_c - (df + 1) / 2 * std::log1p(x * x / df));
}

// 1 - 2 * integral_0^|t| f(x) dx, composite Simpson.
inline double QuadratureTwoSidedP(double t, double df, int intervals = 20000) {
  const long double upper = std::fabs(static_cast<long double>(t));
  if (upper == 0) return 1.0;
  const long double h = upper / intervals;
  long double sum = TDensity(0, df) + TDensity(upper, df);
  for (int i = 1; i < intervals; ++i) {
    sum += (i % 2 ? 4 : 2) * TDensity(i * h, df);
  }
  const long double mass = sum * h / 3;
  return static_cast<double>(1 - 2 * mass);
}

struct ExtendedSummary {
  long double mean = 0;
  long double var = 0;  // sample variance
  long double n = 0;
};

inline ExtendedSummary Summarize(std::span<const double> xs) {
  ExtendedSummary s;
  s.n = static_cast<long double>(xs.size());
  for (double x : xs) s.mean += x;
  s.mean /= s.n;
  for (double x : xs) s.var += (x - s.mean) * (x - s.mean);
  s.var /= s.n - 1;
  return s;
}

inline long double ExtendedCohensD(std::span<const double> a,
                                   std::span<const double> b) {
  const ExtendedSummary sa = Summarize(a), sb = Summarize(b);
  const long double pooled =
      std::sqrt(((sa.n - 1) * sa.var + (sb.n - 1) * sb.var) / (sa.n + sb.n - 2));
  return (sa.mean - sb.mean) / pooled;
}

// Welch statistic and degrees of freedom in long double.
inline void ExtendedWelch(std::span<const double> a, std::span<const double> b,
                          long double& t, long double& df) {
  const ExtendedSummary sa = Summarize(a), sb = Summarize(b);
  const long double qa = sa.var / sa.n, qb = sb.var / sb.n;
  t = (sa.mean - sb.mean) / std::sqrt(qa + qb);
  df = (qa + qb) * (qa + qb) /
       (qa * qa / (sa.n - 1) + qb * qb / (sb.n - 1));
}

}  // namespace stylolab::testing

#endif  // STYLOLAB_TESTS_SUPPORT_STATS_ORACLE_H_
