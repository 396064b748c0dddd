#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "enercast/dataset.hpp"
#include "enercast/normalize.hpp"

namespace enercast {

/// One supervised example. Depending on where it came from the values are
/// either physical units (raw_samples) or min-max scaled (featurize).
///
/// Feature layout for lag window L:
///   [0, L)   consumption of months t-L .. t-1 (oldest first)
///   L, L+1   sin(2*pi*m/12), cos(2*pi*m/12) of the target month m
///   L+2..L+5 temperature, humidity, population, GDP per capita of month t
struct Sample {
    std::vector<double> features;
    double target = 0.0;
    YearMonth when;

    friend bool operator==(const Sample&, const Sample&) = default;
};

inline constexpr std::size_t kExtraFeatures = 6;

inline std::size_t feature_count(std::size_t lag_window) { return lag_window + kExtraFeatures; }

struct NormalizationParams {
    std::vector<FeatureRange> features;
    FeatureRange target;

    friend bool operator==(const NormalizationParams&, const NormalizationParams&) = default;
};

/// Raw feature vector for `month` given the preceding consumptions.
inline std::vector<double> raw_features(std::span<const double> lagged_consumption,
                                        const MonthlyRecord& month) {
    constexpr double two_pi = 6.28318530717958647692;
    std::vector<double> f(lagged_consumption.begin(), lagged_consumption.end());
    f.reserve(lagged_consumption.size() + kExtraFeatures);
    f.push_back(std::sin(two_pi * month.month / 12.0));
    f.push_back(std::cos(two_pi * month.month / 12.0));
    f.push_back(month.temperature);
    f.push_back(month.humidity);
    f.push_back(month.population);
    f.push_back(month.gdp_per_capita);
    return f;
}

/// Physical-unit samples, one per month that has `lag_window` predecessors.
inline std::vector<Sample> raw_samples(const Dataset& d, std::size_t lag_window) {
    if (lag_window < 1) throw FeaturizeError("lag window must be >= 1");
    if (d.size() <= lag_window)
        throw FeaturizeError("dataset has " + std::to_string(d.size()) +
                             " months; lag window " + std::to_string(lag_window) +
                             " needs at least " + std::to_string(lag_window + 1));
    std::vector<double> consumption;
    consumption.reserve(d.size());
    for (const auto& r : d.records()) consumption.push_back(r.consumption);

    std::vector<Sample> out;
    out.reserve(d.size() - lag_window);
    for (std::size_t t = lag_window; t < d.size(); ++t) {
        std::span<const double> lags(consumption.data() + (t - lag_window), lag_window);
        out.push_back({raw_features(lags, d[t]), d[t].consumption, d[t].when()});
    }
    return out;
}

/// Fits per-column ranges on the given (training) samples only.
inline NormalizationParams fit_normalizer(std::span<const Sample> training) {
    if (training.empty()) throw FitError("cannot fit normalizer on an empty subset");
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<double>> targets;
    cols.reserve(training.size());
    targets.reserve(training.size());
    for (const auto& s : training) {
        cols.push_back(s.features);
        targets.push_back({s.target});
    }
    return {fit_ranges(cols), fit_ranges(targets).front()};
}

inline std::vector<double> normalize_features(std::span<const double> raw,
                                              const NormalizationParams& p) {
    if (raw.size() != p.features.size())
        throw ShapeError("feature vector has " + std::to_string(raw.size()) +
                         " entries, normalizer expects " + std::to_string(p.features.size()));
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = normalize(raw[i], p.features[i]);
    return out;
}

inline Sample normalize_sample(const Sample& raw, const NormalizationParams& p) {
    return {normalize_features(raw.features, p), normalize(raw.target, p.target), raw.when};
}

inline std::vector<Sample> normalize_samples(std::span<const Sample> raw,
                                             const NormalizationParams& p) {
    std::vector<Sample> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(normalize_sample(s, p));
    return out;
}

/// Normalized supervised samples: exactly d.size() - lag_window of them.
inline std::vector<Sample> featurize(const Dataset& d, std::size_t lag_window,
                                     const NormalizationParams& p) {
    return normalize_samples(raw_samples(d, lag_window), p);
}

}  // namespace enercast
