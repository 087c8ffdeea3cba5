#pragma once

#include <string>
#include <vector>

namespace kex {

struct PRPoint {
  double threshold = 0.0;
  double recall = 0.0;
  double precision = 0.0;
};

struct PRCurve {
  std::vector<PRPoint> points;  // ascending recall / descending threshold
  double auc = 0.0;
};

// One operating point per distinct score, sweeping thresholds from high to
// low; tied scores collapse into a single point. Optional per-example
// weights make the counts weighted. Throws when there is no positive.
PRCurve pr_curve(const std::vector<double>& scores, const std::vector<int>& labels,
                 const std::vector<double>& weights = {});

// Trapezoidal area over recall in [0, 1]. The curve is anchored at recall 0
// with the first point's precision.
double auc_pr(const std::vector<PRPoint>& points);

void save_curve_csv(const PRCurve& curve, const std::string& path);

}  // namespace kex
