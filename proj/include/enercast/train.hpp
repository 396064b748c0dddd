#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "enercast/ann.hpp"
#include "enercast/features.hpp"

namespace enercast {

struct TrainConfig {
    double learning_rate = 0.05;
    int max_epochs = 3000;
    double mse_tolerance = 1e-6;  // stop once epoch MSE <= this
    int patience = 200;           // epochs with improvement < kMinImprovement
    std::uint64_t shuffle_seed = 2;

    friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

inline constexpr double kMinImprovement = 1e-9;

inline void validate(const TrainConfig& tc) {
    if (!(tc.learning_rate >= 0.0) || !std::isfinite(tc.learning_rate))
        throw ConfigError("learning_rate must be finite and >= 0");
    if (tc.max_epochs < 1) throw ConfigError("max_epochs must be >= 1");
    if (!(tc.mse_tolerance >= 0.0)) throw ConfigError("mse_tolerance must be >= 0");
    if (tc.patience < 1) throw ConfigError("patience must be >= 1");
}

enum class StopReason { tolerance, patience, max_epochs };

inline std::string_view to_string(StopReason r) {
    switch (r) {
        case StopReason::tolerance: return "tolerance";
        case StopReason::patience: return "patience";
        case StopReason::max_epochs: return "max_epochs";
    }
    return "?";
}

struct TrainReport {
    int epochs_run = 0;
    std::vector<double> epoch_mse;
    StopReason stop_reason = StopReason::max_epochs;

    friend bool operator==(const TrainReport&, const TrainReport&) = default;
};

/// Mean of (y - yhat)^2 over all samples.
inline double mean_squared_error(const Network& net, std::span<const Sample> samples) {
    long double sum = 0.0L;
    for (const auto& s : samples) sum += sample_loss(net, s.features, s.target);
    return static_cast<double>(sum / static_cast<long double>(samples.size()));
}

/// Per-sample gradient descent. Each epoch visits the samples in an order
/// drawn from a generator seeded once with tc.shuffle_seed, then records the
/// training MSE of the updated network.
inline std::pair<Network, TrainReport> train(Network net, std::span<const Sample> samples,
                                             const TrainConfig& tc) {
    validate(tc);
    if (samples.empty()) throw ConfigError("train needs at least one sample");
    for (const auto& s : samples)
        if (s.features.size() != net.input_size())
            throw ShapeError("sample has " + std::to_string(s.features.size()) +
                             " features, network expects " + std::to_string(net.input_size()));

    Rng rng(tc.shuffle_seed);
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    TrainReport report;
    report.epoch_mse.reserve(static_cast<std::size_t>(tc.max_epochs));
    double best = 0.0;
    int stale = 0;
    for (int epoch = 1; epoch <= tc.max_epochs; ++epoch) {
        rng.shuffle(std::span<std::size_t>(order));
        for (std::size_t idx : order) {
            const auto& s = samples[idx];
            Parameters grad;
            try {
                grad = compute_gradients(net, s.features, s.target);
            } catch (const NumericError& e) {
                throw TrainingDiverged(epoch, e.what());
            }
            if (tc.learning_rate == 0.0) continue;
            for (std::size_t li = 0; li < grad.layers.size(); ++li) {
                auto& layer = net.params.layers[li];
                const auto& g = grad.layers[li];
                for (std::size_t i = 0; i < layer.weights.size(); ++i)
                    layer.weights[i] -= tc.learning_rate * g.weights[i];
                for (std::size_t i = 0; i < layer.bias.size(); ++i)
                    layer.bias[i] -= tc.learning_rate * g.bias[i];
            }
        }
        const double mse = mean_squared_error(net, samples);
        if (!std::isfinite(mse)) throw TrainingDiverged(epoch, "training MSE is not finite");
        report.epoch_mse.push_back(mse);
        report.epochs_run = epoch;

        if (mse <= tc.mse_tolerance) {
            report.stop_reason = StopReason::tolerance;
            break;
        }
        if (epoch > 1) {
            stale = (best - mse < kMinImprovement) ? stale + 1 : 0;
            if (stale >= tc.patience) {
                report.stop_reason = StopReason::patience;
                break;
            }
        }
        best = epoch == 1 ? mse : std::min(best, mse);
        report.stop_reason = StopReason::max_epochs;
    }
    return {std::move(net), std::move(report)};
}

}  // namespace enercast
