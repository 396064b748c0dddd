#pragma once

#include <cstdint>
#include <future>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enercast/ann.hpp"
#include "enercast/features.hpp"
#include "enercast/metrics.hpp"
#include "enercast/random.hpp"
#include "enercast/train.hpp"

namespace enercast {

enum class FoldMode { shuffled, chronological };

inline std::string_view to_string(FoldMode m) {
    return m == FoldMode::shuffled ? "shuffled" : "chronological";
}

inline FoldMode parse_fold_mode(std::string_view s) {
    if (s == "shuffled") return FoldMode::shuffled;
    if (s == "chronological") return FoldMode::chronological;
    throw ConfigError("unknown fold mode '" + std::string(s) + "'");
}

struct FoldPlan {
    int k = 0;
    std::vector<std::vector<std::size_t>> folds;
    std::uint64_t shuffle_seed = 0;
    FoldMode mode = FoldMode::chronological;

    friend bool operator==(const FoldPlan&, const FoldPlan&) = default;
};

/// Splits {0..n-1} into k folds whose sizes differ by at most one; the first
/// n % k folds hold the extra index. Chronological folds are contiguous
/// blocks; shuffled folds deal a seeded permutation round-robin.
inline FoldPlan make_folds(std::size_t n, int k, std::uint64_t seed, FoldMode mode) {
    if (k < 2) throw PlanError("k must be >= 2, got " + std::to_string(k));
    if (static_cast<std::size_t>(k) > n)
        throw PlanError("k = " + std::to_string(k) + " exceeds sample count " + std::to_string(n));
    FoldPlan plan{k, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(k)), seed, mode};
    const auto kk = static_cast<std::size_t>(k);
    if (mode == FoldMode::chronological) {
        const std::size_t base = n / kk;
        const std::size_t extra = n % kk;
        std::size_t next = 0;
        for (std::size_t f = 0; f < kk; ++f) {
            const std::size_t len = base + (f < extra ? 1 : 0);
            plan.folds[f].resize(len);
            std::iota(plan.folds[f].begin(), plan.folds[f].end(), next);
            next += len;
        }
    } else {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Rng rng(seed);
        rng.shuffle(std::span<std::size_t>(perm));
        for (std::size_t i = 0; i < n; ++i) plan.folds[i % kk].push_back(perm[i]);
    }
    return plan;
}

struct FoldResult {
    int fold_index = 0;
    MetricsReport report;  // physical units, on the held-out fold
    TrainReport train_report;
    NormalizationParams normalization;  // fitted on the training partition only
    std::vector<std::size_t> training_indices;
    std::vector<std::size_t> validation_indices;
    std::vector<double> predictions;  // denormalized, aligned with validation_indices
};

struct CrossValReport {
    std::vector<FoldResult> per_fold;
    MetricsReport mean_report;
    /// Retrained on every sample after validation; used for forecasting.
    Network final_model;
    NormalizationParams final_normalization;
    TrainReport final_train_report;
};

/// Unweighted mean of each metric across folds.
inline MetricsReport aggregate_folds(std::span<const FoldResult> results) {
    if (results.empty()) throw AggregationError("no fold results to aggregate");
    MetricsReport sum;
    for (const auto& r : results) {
        sum.mse += r.report.mse;
        sum.rmse_paper += r.report.rmse_paper;
        sum.rmse_standard += r.report.rmse_standard;
        sum.mae += r.report.mae;
        sum.mape_pct += r.report.mape_pct;
    }
    const double n = static_cast<double>(results.size());
    return {sum.mse / n, sum.rmse_paper / n, sum.rmse_standard / n, sum.mae / n, sum.mape_pct / n};
}

struct CrossValOptions {
    bool parallel = false;  // train folds on separate threads
};

namespace detail {

struct FitOutcome {
    Network net;
    NormalizationParams params;
    TrainReport report;
};

inline FitOutcome fit_on(std::span<const Sample> raw, const NetworkConfig& net_cfg,
                         const TrainConfig& train_cfg) {
    NormalizationParams params = fit_normalizer(raw);
    const auto normalized = normalize_samples(raw, params);
    auto [net, report] = train(init_network(net_cfg), normalized, train_cfg);
    return {std::move(net), std::move(params), std::move(report)};
}

inline FoldResult run_fold(std::span<const Sample> raw, const FoldPlan& plan, int j,
                           const NetworkConfig& net_cfg, const TrainConfig& train_cfg) {
    FoldResult result;
    result.fold_index = j;
    result.validation_indices = plan.folds[static_cast<std::size_t>(j)];
    std::vector<bool> held_out(raw.size(), false);
    for (auto i : result.validation_indices) held_out[i] = true;

    std::vector<Sample> training;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (held_out[i]) continue;
        result.training_indices.push_back(i);
        training.push_back(raw[i]);
    }

    FitOutcome fit;
    try {
        fit = fit_on(training, net_cfg, train_cfg);
    } catch (const NumericError& e) {
        throw FoldError(j, e.what());
    }
    result.normalization = std::move(fit.params);
    result.train_report = std::move(fit.report);

    std::vector<double> actual;
    for (auto i : result.validation_indices) {
        const auto x = normalize_features(raw[i].features, result.normalization);
        result.predictions.push_back(
            denormalize(predict(fit.net, x), result.normalization.target));
        actual.push_back(raw[i].target);
    }
    try {
        result.report = compute_report(SeriesPair(std::move(actual), result.predictions));
    } catch (const NumericError& e) {
        throw FoldError(j, e.what());
    }
    return result;
}

}  // namespace detail

/// k-fold cross validation over physical-unit samples. Each fold fits its own
/// normalizer on the other k-1 folds, trains a freshly initialized network,
/// and is scored in physical units. A final model is then trained on all
/// samples. Results are ordered by fold index whether or not folds run in
/// parallel.
inline CrossValReport cross_validate(std::span<const Sample> raw, int k, std::uint64_t seed,
                                     FoldMode mode, const NetworkConfig& net_cfg,
                                     const TrainConfig& train_cfg,
                                     const CrossValOptions& options = {}) {
    validate(net_cfg);
    validate(train_cfg);
    const FoldPlan plan = make_folds(raw.size(), k, seed, mode);

    CrossValReport out;
    if (options.parallel) {
        std::vector<std::future<FoldResult>> pending;
        for (int j = 0; j < k; ++j)
            pending.push_back(std::async(std::launch::async, [&, j] {
                return detail::run_fold(raw, plan, j, net_cfg, train_cfg);
            }));
        for (auto& f : pending) out.per_fold.push_back(f.get());
    } else {
        for (int j = 0; j < k; ++j)
            out.per_fold.push_back(detail::run_fold(raw, plan, j, net_cfg, train_cfg));
    }
    out.mean_report = aggregate_folds(out.per_fold);

    auto final_fit = detail::fit_on(raw, net_cfg, train_cfg);
    out.final_model = std::move(final_fit.net);
    out.final_normalization = std::move(final_fit.params);
    out.final_train_report = std::move(final_fit.report);
    return out;
}

/// The 2-fold scheme.
inline CrossValReport two_fold_validate(std::span<const Sample> raw, std::uint64_t seed,
                                        FoldMode mode, const NetworkConfig& net_cfg,
                                        const TrainConfig& train_cfg,
                                        const CrossValOptions& options = {}) {
    return cross_validate(raw, 2, seed, mode, net_cfg, train_cfg, options);
}

inline void write_crossval_csv(std::ostream& out, const CrossValReport& r) {
    auto row = [&](const std::string& label, const MetricsReport& m) {
        out << label << ',' << text::format_fixed(m.mse, 6) << ','
            << text::format_fixed(m.rmse_paper, 6) << ',' << text::format_fixed(m.rmse_standard, 6)
            << ',' << text::format_fixed(m.mae, 6) << ',' << text::format_fixed(m.mape_pct, 6)
            << '\n';
    };
    out << "fold,mse,rmse_paper,rmse_standard,mae,mape_pct\n";
    for (const auto& f : r.per_fold) row(std::to_string(f.fold_index), f.report);
    row("mean", r.mean_report);
}

}  // namespace enercast
