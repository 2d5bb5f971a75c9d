#include "spinex/metrics.hpp"

#include <algorithm>
#include <string>

#include "spinex/error.hpp"

namespace spinex {

ConfusionCounts confusion(const std::vector<int>& labels, const std::vector<int>& predictions) {
    if (labels.size() != predictions.size()) {
        throw ArgumentError("labels and predictions differ in length: " +
                            std::to_string(labels.size()) + " vs " +
                            std::to_string(predictions.size()));
    }
    if (labels.empty()) {
        throw ArgumentError("labels must not be empty");
    }
    ConfusionCounts c;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int label = labels[i];
        const int pred = predictions[i];
        if (label != 0 && label != 1) {
            throw ArgumentError("label at index " + std::to_string(i) + " is not 0 or 1");
        }
        if (pred != 1 && pred != -1) {
            throw ArgumentError("prediction at index " + std::to_string(i) + " is not +1 or -1");
        }
        if (label == 1) {
            (pred == -1 ? c.tp : c.fn) += 1;
        } else {
            (pred == -1 ? c.fp : c.tn) += 1;
        }
    }
    return c;
}

PrecisionRecallF1 precision_recall_f1(const ConfusionCounts& c) {
    const double tp = static_cast<double>(c.tp);
    const double fp = static_cast<double>(c.fp);
    const double fn = static_cast<double>(c.fn);
    PrecisionRecallF1 out;
    out.precision = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
    out.recall = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
    out.f1 = 2.0 * tp + fp + fn > 0.0 ? 2.0 * tp / (2.0 * tp + fp + fn) : 0.0;
    return out;
}

double auc_roc(const std::vector<int>& labels, const std::vector<double>& scores) {
    if (labels.size() != scores.size()) {
        throw ArgumentError("labels and scores differ in length: " +
                            std::to_string(labels.size()) + " vs " +
                            std::to_string(scores.size()));
    }
    std::size_t positives = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw ArgumentError("label at index " + std::to_string(i) + " is not 0 or 1");
        }
        positives += static_cast<std::size_t>(labels[i]);
    }
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0) {
        throw Error("AUC is undefined: labels contain a single class");
    }

    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&scores](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    // Walk thresholds from high to low; a block of tied scores moves the
    // curve in one diagonal step, which the trapezoid scores as half credit.
    double area = 0.0;
    double tp_prev = 0.0;
    double fp_prev = 0.0;
    double tp_cum = 0.0;
    double fp_cum = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) {
            tp_cum += labels[order[j]] == 1 ? 1.0 : 0.0;
            fp_cum += labels[order[j]] == 0 ? 1.0 : 0.0;
            ++j;
        }
        area += (fp_cum - fp_prev) * (tp_cum + tp_prev) / 2.0;
        tp_prev = tp_cum;
        fp_prev = fp_cum;
        i = j;
    }
    return area / (static_cast<double>(positives) * static_cast<double>(negatives));
}

}  // namespace spinex
