#pragma once

#include <cstddef>
#include <vector>

namespace spinex {

/// Anomaly is the positive class: label 1 pairs with prediction -1.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
};

struct PrecisionRecallF1 {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Counts the four cells from 0/1 labels and +-1 predictions. Throws
/// ArgumentError on length mismatch or values outside those alphabets.
ConfusionCounts confusion(const std::vector<int>& labels, const std::vector<int>& predictions);

/// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 = 2tp/(2tp+fp+fn), each
/// defined as 0 when its denominator vanishes.
PrecisionRecallF1 precision_recall_f1(const ConfusionCounts& c);

/// Area under the ROC curve by trapezoidal integration, sweeping distinct
/// score values descending; tied scores form a single step (half credit).
/// Throws Error when labels contain a single class.
double auc_roc(const std::vector<int>& labels, const std::vector<double>& scores);

}  // namespace spinex
