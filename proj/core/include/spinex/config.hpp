#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace spinex {

enum class DistanceMetric { Euclidean, Manhattan, Minkowski };
enum class ScalingMethod { Standard, MinMax, Robust };
enum class ThresholdMethod { Fixed, Statistical, AdaptiveQuantile };
enum class ExplainabilityLevel { Basic, Advanced };

/// Every detector knob with its default. worker_count only affects how the
/// score pass is scheduled, never the result.
struct DetectorConfig {
    bool use_weights = false;
    bool include_interactions = false;
    bool use_nonlinear = false;
    DistanceMetric distance_metric = DistanceMetric::Euclidean;
    double minkowski_p = 2.0;  // exponent, used when distance_metric == Minkowski
    std::optional<ScalingMethod> scaling_method;
    double anomaly_threshold = 98.0;  // percentile for the fixed threshold
    ThresholdMethod threshold_method = ThresholdMethod::Fixed;
    double multiplier = 2.0;      // statistical threshold: mean + multiplier * stddev
    std::size_t window_size = 50;  // adaptive threshold: trailing window length
    double quantile = 0.95;        // adaptive threshold: quantile in (0,1)
    std::size_t worker_count = 1;
    ExplainabilityLevel explainability_level = ExplainabilityLevel::Basic;

    /// Throws ArgumentError when a knob is out of its documented range.
    void validate() const;
};

// String forms used by the CLI and the JSON report. Parsers throw
// ArgumentError listing the valid spellings. parse_distance_metric accepts an
// optional exponent suffix for minkowski, e.g. "minkowski:3".
std::string to_string(DistanceMetric metric);
std::string to_string(ScalingMethod method);
std::string to_string(ThresholdMethod method);
std::string to_string(ExplainabilityLevel level);

struct ParsedMetric {
    DistanceMetric metric;
    double minkowski_p;
};
ParsedMetric parse_distance_metric(const std::string& text);
ScalingMethod parse_scaling_method(const std::string& text);
ThresholdMethod parse_threshold_method(const std::string& text);
ExplainabilityLevel parse_explainability_level(const std::string& text);

}  // namespace spinex
