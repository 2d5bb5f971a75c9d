#include "spinex/config.hpp"

#include <charconv>

#include "spinex/error.hpp"

namespace spinex {

void DetectorConfig::validate() const {
    if (!(anomaly_threshold >= 0.0 && anomaly_threshold <= 100.0)) {
        throw ArgumentError("Anomaly threshold must be between 0 and 100");
    }
    if (window_size < 1) {
        throw ArgumentError("window_size must be at least 1");
    }
    if (!(quantile > 0.0 && quantile < 1.0)) {
        throw ArgumentError("quantile must lie strictly between 0 and 1");
    }
    if (distance_metric == DistanceMetric::Minkowski && !(minkowski_p > 0.0)) {
        throw ArgumentError("minkowski exponent must be positive");
    }
    if (worker_count < 1) {
        throw ArgumentError("worker_count must be at least 1");
    }
}

std::string to_string(DistanceMetric metric) {
    switch (metric) {
        case DistanceMetric::Euclidean: return "euclidean";
        case DistanceMetric::Manhattan: return "manhattan";
        case DistanceMetric::Minkowski: return "minkowski";
    }
    return "euclidean";
}

std::string to_string(ScalingMethod method) {
    switch (method) {
        case ScalingMethod::Standard: return "standard";
        case ScalingMethod::MinMax: return "minmax";
        case ScalingMethod::Robust: return "robust";
    }
    return "standard";
}

std::string to_string(ThresholdMethod method) {
    switch (method) {
        case ThresholdMethod::Fixed: return "fixed";
        case ThresholdMethod::Statistical: return "statistical";
        case ThresholdMethod::AdaptiveQuantile: return "adaptive_quantile";
    }
    return "fixed";
}

std::string to_string(ExplainabilityLevel level) {
    return level == ExplainabilityLevel::Advanced ? "advanced" : "basic";
}

ParsedMetric parse_distance_metric(const std::string& text) {
    if (text == "euclidean") {
        return {DistanceMetric::Euclidean, 2.0};
    }
    if (text == "manhattan") {
        return {DistanceMetric::Manhattan, 2.0};
    }
    if (text == "minkowski") {
        return {DistanceMetric::Minkowski, 2.0};
    }
    if (text.rfind("minkowski:", 0) == 0) {
        const std::string suffix = text.substr(10);
        double p = 0.0;
        const char* first = suffix.data();
        const char* last = suffix.data() + suffix.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc{} || ptr != last || !(p > 0.0)) {
            throw ArgumentError("Invalid minkowski exponent: " + suffix +
                                ". Expected a positive number, e.g. minkowski:3");
        }
        return {DistanceMetric::Minkowski, p};
    }
    throw ArgumentError("Invalid distance metric: " + text +
                        ". Valid options are: euclidean, manhattan, minkowski[:p]");
}

ScalingMethod parse_scaling_method(const std::string& text) {
    if (text == "standard") return ScalingMethod::Standard;
    if (text == "minmax") return ScalingMethod::MinMax;
    if (text == "robust") return ScalingMethod::Robust;
    throw ArgumentError("Invalid scaling method: " + text +
                        ". Valid options are: standard, minmax, robust");
}

ThresholdMethod parse_threshold_method(const std::string& text) {
    if (text == "fixed") return ThresholdMethod::Fixed;
    if (text == "statistical") return ThresholdMethod::Statistical;
    if (text == "adaptive_quantile") return ThresholdMethod::AdaptiveQuantile;
    throw ArgumentError("Unknown threshold method: " + text +
                        ". Valid options are: fixed, statistical, adaptive_quantile");
}

ExplainabilityLevel parse_explainability_level(const std::string& text) {
    if (text == "basic") return ExplainabilityLevel::Basic;
    if (text == "advanced") return ExplainabilityLevel::Advanced;
    throw ArgumentError("Invalid explainability level: " + text +
                        ". Valid options are: basic, advanced");
}

}  // namespace spinex
