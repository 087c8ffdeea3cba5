#include "kex/pr_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kex/csv.hpp"
#include "kex/util.hpp"

namespace kex {

PRCurve pr_curve(const std::vector<double>& scores, const std::vector<int>& labels,
                 const std::vector<double>& weights) {
  const size_t n = scores.size();
  if (labels.size() != n) throw std::invalid_argument("scores/labels size mismatch");
  if (!weights.empty() && weights.size() != n) {
    throw std::invalid_argument("weights size mismatch");
  }
  double total_positive = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(scores[i])) {
      throw std::invalid_argument("non-finite score at index " + std::to_string(i));
    }
    if (labels[i]) total_positive += weights.empty() ? 1.0 : weights[i];
  }
  if (total_positive <= 0.0) {
    throw std::runtime_error("precision-recall curve needs at least one positive example");
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] > scores[b]; });

  PRCurve curve;
  double tp = 0.0, fp = 0.0;
  size_t i = 0;
  while (i < n) {
    const double threshold = scores[order[i]];
    // absorb the whole tie group before emitting a point
    while (i < n && scores[order[i]] == threshold) {
      const double w = weights.empty() ? 1.0 : weights[order[i]];
      if (labels[order[i]]) tp += w;
      else fp += w;
      ++i;
    }
    PRPoint point;
    point.threshold = threshold;
    point.recall = tp / total_positive;
    point.precision = (tp + fp) > 0.0 ? tp / (tp + fp) : 0.0;
    curve.points.push_back(point);
  }
  curve.auc = auc_pr(curve.points);
  return curve;
}

double auc_pr(const std::vector<PRPoint>& points) {
  if (points.empty()) return 0.0;
  double area = 0.0;
  double prev_recall = 0.0;
  double prev_precision = points.front().precision;  // anchor at recall 0
  for (const PRPoint& pt : points) {
    area += (pt.recall - prev_recall) * (pt.precision + prev_precision) / 2.0;
    prev_recall = pt.recall;
    prev_precision = pt.precision;
  }
  return area;
}

void save_curve_csv(const PRCurve& curve, const std::string& path) {
  std::string out = "threshold,recall,precision\n";
  for (const PRPoint& pt : curve.points) {
    out += format_double(pt.threshold);
    out += ',';
    out += format_double(pt.recall);
    out += ',';
    out += format_double(pt.precision);
    out += '\n';
  }
  write_text_file(path, out);
}

}  // namespace kex
