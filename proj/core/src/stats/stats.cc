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


#include "stylolab/stats/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"

namespace stylolab::stats {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Continued fraction for I_x(a, b), valid for x < (a + 1) / (a + b + 2).
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 100000;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) return h;
  }
  throw Error("incomplete beta continued fraction did not converge");
}

// I_x(a, b) with y = 1 - x supplied separately to keep precision near 1.
double IncompleteBeta(double a, double b, double x, double y) {
  if (x <= 0) return 0.0;
  if (y <= 0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) + b * std::log(y);
  if (x < (a + 1) / (a + b + 2)) {
    return std::exp(log_front) * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * BetaContinuedFraction(b, a, y) / b;
}

void CheckSummary(const GroupSummary& g, const char* which) {
  if (g.n < 2) {
    throw InputError(std::string("group ") + which + " needs n >= 2");
  }
  if (!std::isfinite(g.mean) || !std::isfinite(g.sd) || g.sd < 0) {
    throw InputError(std::string("group ") + which +
                     " has a non-finite mean or invalid sd");
  }
}

TTestResult FromStandardError(double diff, double se, double df) {
  TTestResult r;
  r.df = df;
  if (se == 0) {
    r.degenerate = true;
    if (diff == 0) {
      r.t = 0;
      r.p = 1;
    } else {
      r.t = diff > 0 ? kInf : -kInf;
      r.p = 0;
    }
    return r;
  }
  r.t = diff / se;
  r.p = StudentTwoSidedP(r.t, df);
  return r;
}

std::string FormatP(double p) {
  if (std::isnan(p)) return "";
  if (p < 1e-4) return "<0.0001";
  return FormatFixed(p, 4);
}

}  // namespace

GroupSummary GroupSummary::FromSample(std::span<const double> values) {
  if (values.size() < 2) {
    throw InputError("a group summary needs at least two values");
  }
  double sum = 0;
  for (double v : values) sum += v;
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1)), values.size()};
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0) || !(x >= 0) || !(x <= 1)) {
    throw InputError("incomplete beta needs a, b > 0 and x in [0, 1]");
  }
  return IncompleteBeta(a, b, x, 1.0 - x);
}

double StudentTwoSidedP(double t, double df) {
  if (!(df > 0)) throw InputError("t distribution needs df > 0");
  if (std::isnan(t)) return kNaN;
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  // x = df / (df + t^2), y = 1 - x computed without cancellation.
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  return std::clamp(IncompleteBeta(df / 2, 0.5, x, y), 0.0, 1.0);
}

TTestResult WelchT(const GroupSummary& a, const GroupSummary& b) {
  CheckSummary(a, "A");
  CheckSummary(b, "B");
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
  const double qa = a.sd * a.sd / na, qb = b.sd * b.sd / nb;
  const double se2 = qa + qb;
  const double df = se2 == 0 ? na + nb - 2
                             : se2 * se2 / (qa * qa / (na - 1) + qb * qb / (nb - 1));
  return FromStandardError(a.mean - b.mean, std::sqrt(se2), df);
}

TTestResult StudentT(const GroupSummary& a, const GroupSummary& b) {
  CheckSummary(a, "A");
  CheckSummary(b, "B");
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
  const double se = PooledSd(a, b) * std::sqrt(1 / na + 1 / nb);
  return FromStandardError(a.mean - b.mean, se, na + nb - 2);
}

TTestResult TTest(const GroupSummary& a, const GroupSummary& b,
                  TTestForm form) {
  return form == TTestForm::kWelch ? WelchT(a, b) : StudentT(a, b);
}

double PooledSd(const GroupSummary& a, const GroupSummary& b) {
  if (a.n + b.n <= 2) throw InputError("pooled sd needs n_a + n_b > 2");
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
  return std::sqrt(((na - 1) * a.sd * a.sd + (nb - 1) * b.sd * b.sd) /
                   (na + nb - 2));
}

double CohensD(const GroupSummary& a, const GroupSummary& b) {
  const double sp = PooledSd(a, b);
  if (sp == 0) throw DegenerateError("Cohen's d undefined: pooled sd is 0");
  return (a.mean - b.mean) / sp;
}

std::string_view EffectBand(double abs_d) {
  if (abs_d < 0.2) return "negligible";
  if (abs_d < 0.5) return "small";
  if (abs_d < 0.8) return "medium";
  return "large";
}

double BonferroniThreshold(double alpha, std::size_t m) {
  if (!(alpha > 0 && alpha < 1)) throw InputError("alpha must be in (0, 1)");
  if (m == 0) throw InputError("Bonferroni needs m >= 1");
  return alpha / static_cast<double>(m);
}

std::string_view ToString(Correction c) {
  return c == Correction::kNone ? "none" : "bonferroni";
}

std::string_view ToString(TTestForm f) {
  return f == TTestForm::kWelch ? "welch" : "student";
}

std::size_t ComparisonReport::SignificantCount() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const ComparisonRow& r) { return r.significant; }));
}

std::vector<std::size_t> ComparisonReport::OrderByEffect() const {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = rows[x];
    const auto& b = rows[y];
    if (a.d.has_value() != b.d.has_value()) return a.d.has_value();
    if (a.d && std::abs(*a.d) != std::abs(*b.d)) {
      return std::abs(*a.d) > std::abs(*b.d);
    }
    return a.feature < b.feature;
  });
  return order;
}

std::string ComparisonReport::ToCsv() const {
  CsvWriter w;
  w.AddRow({"feature", "mean_a", "sd_a", "n_a", "mean_b", "sd_b", "n_b", "t",
            "df", "p", "d", "abs_d", "band", "significant", "degenerate"});
  for (const ComparisonRow& r : rows) {
    const bool tested = r.a.n >= 2 && r.b.n >= 2;
    w.AddRow({r.feature, FormatDouble(r.a.mean), FormatDouble(r.a.sd),
              std::to_string(r.a.n), FormatDouble(r.b.mean),
              FormatDouble(r.b.sd), std::to_string(r.b.n),
              tested ? FormatDouble(r.test.t) : "",
              tested ? FormatDouble(r.test.df) : "",
              tested ? FormatDouble(r.test.p) : "",
              r.d ? FormatDouble(*r.d) : "",
              r.d ? FormatDouble(std::abs(*r.d)) : "",
              r.d ? std::string(EffectBand(std::abs(*r.d))) : "",
              r.significant ? "true" : "false",
              r.degenerate ? "true" : "false"});
  }
  return w.str();
}

std::string ComparisonReport::ToMarkdown(bool significant_only) const {
  std::string out = "| Feature | " + label_a + " μ (σ) | " + label_b +
                    " μ (σ) | t | p | d | Effect |\n";
  out += "|---|---|---|---|---|---|---|\n";
  for (std::size_t i : OrderByEffect()) {
    const ComparisonRow& r = rows[i];
    if (significant_only && !r.significant) continue;
    std::string name = r.significant ? "**" + r.feature + "**" : r.feature;
    out += "| " + name + " | " + FormatFixed(r.a.mean, 2) + " (" +
           FormatFixed(r.a.sd, 2) + ") | " + FormatFixed(r.b.mean, 2) + " (" +
           FormatFixed(r.b.sd, 2) + ") | " +
           (std::isfinite(r.test.t) ? FormatFixed(r.test.t, 2) : "inf") +
           " | " + FormatP(r.test.p) + " | " +
           (r.d ? FormatFixed(*r.d, 2) : "n/a") + " | " +
           (r.d ? std::string(EffectBand(std::abs(*r.d))) : "degenerate") +
           " |\n";
  }
  out += "\nm = " + std::to_string(m) + ", α = " + FormatDouble(alpha) +
         ", threshold = " + FormatDouble(threshold) + " (" +
         std::string(ToString(correction)) + ", " + std::string(ToString(form)) +
         " t-test)\n";
  return out;
}

ComparisonReport CompareGroups(const FeatureTable& a, const FeatureTable& b,
                               const CompareOptions& options) {
  if (a.columns() != b.columns()) {
    throw InputError("cannot compare tables with different feature columns");
  }
  ComparisonReport report;
  report.alpha = options.alpha;
  report.correction = options.correction;
  report.form = options.form;
  report.m = options.comparisons.value_or(a.cols());
  if (report.m == 0) report.m = 1;
  report.threshold = options.correction == Correction::kBonferroni
                         ? BonferroniThreshold(options.alpha, report.m)
                         : options.alpha;
  report.rows.resize(a.cols());

  auto finite_column = [](const FeatureTable& t, std::size_t c) {
    std::vector<double> v;
    v.reserve(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (std::isfinite(t.at(r, c))) v.push_back(t.at(r, c));
    }
    return v;
  };

  ParallelFor(a.cols(), options.workers, [&](std::size_t c) {
    ComparisonRow& row = report.rows[c];
    row.feature = a.columns()[c];
    const std::vector<double> va = finite_column(a, c);
    const std::vector<double> vb = finite_column(b, c);
    if (va.size() < 2 || vb.size() < 2) {
      row.degenerate = true;
      row.note = "fewer than two finite values in a group";
      row.a.n = va.size();
      row.b.n = vb.size();
      row.test.p = kNaN;
      return;
    }
    row.a = GroupSummary::FromSample(va);
    row.b = GroupSummary::FromSample(vb);
    row.test = TTest(row.a, row.b, options.form);
    if (PooledSd(row.a, row.b) > 0) {
      row.d = CohensD(row.a, row.b);
    } else {
      row.degenerate = true;
      row.note = "zero variance in both groups";
    }
    row.significant = !row.degenerate && row.test.p < report.threshold;
  });
  return report;
}

}  // namespace stylolab::stats
