// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and thresholds are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "enercast/enercast.hpp"
#include "oracle/metric_oracle.hpp"
#include "oracle/random_series.hpp"
#include "temp_dir.hpp"

using namespace enercast;

namespace {

constexpr double kFixtureRelTol = 1e-9;
constexpr int kPropertySeries = 200;
constexpr int kGradientInstances = 100;
constexpr double kGradientRelTol = 1e-4;
constexpr double kGradientStep = 1e-5;
constexpr double kGradientSeconds = 10.0;
constexpr double kXorMse = 0.01;
constexpr int kXorEpochs = 20000;
constexpr std::uint64_t kXorSeed = 1;
constexpr double kConstantForecastRel = 0.01;
constexpr double kLearnabilitySeconds = 30.0;
constexpr double kEndToEndMapePct = 5.0;
constexpr std::uint64_t kSyntheticSeed = 7;
constexpr double kEndToEndSeconds = 120.0;
constexpr double kRoundTripRel = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

// 1. Fixture metrics vs. a 50-digit straight-summation oracle.
Outcome fixture_metrics() {
    const auto t = load_fixture_tables();
    double worst = 0.0;
    for (const auto* s : {&t.actual_vs_2fold_2012, &t.actual_vs_kfold_2012,
                          &t.actual_vs_2fold_2013, &t.actual_vs_kfold_2013}) {
        const auto o = oracle::metrics(s->actual(), s->forecast());
        worst = std::max({worst, oracle::rel_diff(mse(*s), o.mse),
                          oracle::rel_diff(rmse_paper(*s), o.rmse_paper),
                          oracle::rel_diff(rmse_standard(*s), o.rmse_standard),
                          oracle::rel_diff(mae(*s), o.mae), oracle::rel_diff(mape(*s), o.mape_pct)});
    }
    return {worst <= kFixtureRelTol, "20 values, worst relative error " + fmt(worst)};
}

// 2. Metric properties over randomized series.
Outcome metric_properties() {
    std::mt19937_64 gen(20240601);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    int failures = 0;
    for (int i = 0; i < kPropertySeries; ++i) {
        const auto s = testgen::random_series(gen);
        const SeriesPair p(s.actual, s.forecast);
        const auto r = compute_report(p);
        const double n = static_cast<double>(p.n());

        if (r.mse < 0 || r.rmse_paper < 0 || r.rmse_standard < 0 || r.mae < 0 || r.mape_pct < 0)
            ++failures;
        const bool equal = s.actual == s.forecast;
        if ((r.mse == 0.0) != equal || (r.mae == 0.0) != equal || (r.rmse_paper == 0.0) != equal ||
            (r.rmse_standard == 0.0) != equal)
            ++failures;
        if (compute_report(SeriesPair(s.actual, s.actual)) != MetricsReport{}) ++failures;

        const double identity = std::sqrt(r.mse / n);
        if (std::abs(r.rmse_paper - identity) > 1e-12 * identity) ++failures;
        if (r.mae > r.rmse_standard * (1 + 1e-15)) ++failures;

        std::vector<std::size_t> idx(p.n());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), gen);
        std::vector<double> pa, pf, sa, sf;
        const double c = scale(gen);
        for (std::size_t j = 0; j < p.n(); ++j) {
            pa.push_back(s.actual[idx[j]]);
            pf.push_back(s.forecast[idx[j]]);
            sa.push_back(c * s.actual[j]);
            sf.push_back(c * s.forecast[j]);
        }
        const auto rp = compute_report(SeriesPair(pa, pf));
        auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(b), 1e-300); };
        if (!close(rp.mse, r.mse) || !close(rp.mae, r.mae) || !close(rp.rmse_paper, r.rmse_paper) ||
            !close(rp.rmse_standard, r.rmse_standard) || !close(rp.mape_pct, r.mape_pct))
            ++failures;
        if (!close(mape(SeriesPair(sa, sf)), r.mape_pct)) ++failures;
    }
    return {failures == 0,
            std::to_string(kPropertySeries) + " series x 6 properties, " + std::to_string(failures) +
                " failures"};
}

// 3. Backprop vs. central differences on random networks.
Outcome gradient_check() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(777);
    std::uniform_int_distribution<std::size_t> width(1, 8);
    std::uniform_int_distribution<int> depth(1, 2);
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::bernoulli_distribution coin(0.5);
    double worst = 0.0;
    std::size_t params = 0;
    for (int i = 0; i < kGradientInstances; ++i) {
        NetworkConfig cfg;
        cfg.layer_sizes = {width(gen)};
        for (int d = depth(gen); d > 0; --d) cfg.layer_sizes.push_back(width(gen));
        cfg.layer_sizes.push_back(1);
        cfg.hidden_activation = coin(gen) ? Activation::sigmoid : Activation::tanh;
        cfg.output_activation = coin(gen) ? Activation::linear : Activation::sigmoid;
        cfg.init_seed = gen();
        cfg.init_scale = mag(gen);
        const Network net = init_network(cfg);
        std::vector<double> x(cfg.layer_sizes.front());
        for (auto& v : x) v = coin(gen) ? mag(gen) : -mag(gen);
        const double y = coin(gen) ? mag(gen) : -mag(gen);

        const auto analytic = compute_gradients(net, x, y);
        const auto numeric = finite_diff_gradient(net, x, y, kGradientStep);
        for (std::size_t p = 0; p < analytic.size(); ++p, ++params) {
            const double a = analytic[p], b = numeric[p];
            const double denom = std::max({std::abs(a), std::abs(b), 1e-8});
            worst = std::max(worst, std::abs(a - b) / denom);
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= kGradientRelTol && secs < kGradientSeconds,
            std::to_string(kGradientInstances) + " instances, " + std::to_string(params) +
                " parameters, worst relative error " + fmt(worst) + ", " + fmt(secs) + " s"};
}

// 4. XOR and constant-series learnability.
Outcome learnability() {
    const auto t0 = Clock::now();
    NetworkConfig xor_net;
    xor_net.layer_sizes = {2, 4, 1};
    xor_net.hidden_activation = Activation::sigmoid;
    xor_net.output_activation = Activation::sigmoid;
    xor_net.init_seed = kXorSeed;
    TrainConfig xor_train;
    xor_train.learning_rate = 0.5;
    xor_train.max_epochs = kXorEpochs;
    xor_train.mse_tolerance = 0.0;
    xor_train.patience = kXorEpochs;
    xor_train.shuffle_seed = kXorSeed;
    const std::vector<Sample> xor_samples{
        {{0, 0}, 0, {}}, {{0, 1}, 1, {}}, {{1, 0}, 1, {}}, {{1, 1}, 0, {}}};
    const auto [xnet, xreport] = train(init_network(xor_net), xor_samples, xor_train);
    const double xor_mse = mean_squared_error(xnet, xor_samples);

    constexpr double level = 100.0;
    std::vector<MonthlyRecord> recs;
    YearMonth ym{1994, 1};
    for (int i = 0; i < 240; ++i, ym = ym.next())
        recs.push_back({ym.year, ym.month, level, 21.0, 65.0, 1.2e6, 1500.0});
    const Dataset history({recs.begin(), recs.end() - 12});
    const Dataset scenario({recs.end() - 12, recs.end()});
    const RunConfig defaults;
    const auto raw = raw_samples(history, defaults.lag);
    const auto params = fit_normalizer(raw);
    auto [net, report] = train(init_network(defaults.network_config()),
                               normalize_samples(raw, params), defaults.train_config());
    const ForecastModel model{std::move(net), params, defaults.lag};
    double worst = 0.0;
    for (const auto& row : recursive_forecast(model, history, scenario, 12).rows)
        worst = std::max(worst, std::abs(row.forecast - level) / level);

    const double secs = seconds_since(t0);
    return {xor_mse < kXorMse && worst < kConstantForecastRel && secs < kLearnabilitySeconds,
            "XOR mse " + fmt(xor_mse) + " after " + std::to_string(xreport.epochs_run) +
                " epochs (seed " + std::to_string(kXorSeed) + "); constant forecast worst rel error " +
                fmt(worst) + "; " + fmt(secs) + " s"};
}

// 5. Fold partition, leakage guard, and k=2 reduction.
Outcome fold_properties() {
    int bad_plans = 0, plans = 0;
    for (std::size_t n = 2; n <= 60; ++n)
        for (int k = 2; k <= static_cast<int>(n); ++k)
            for (auto mode : {FoldMode::shuffled, FoldMode::chronological}) {
                ++plans;
                const auto plan = make_folds(n, k, n * 1000 + static_cast<std::size_t>(k), mode);
                std::vector<int> seen(n, 0);
                std::size_t lo = n, hi = 0;
                for (const auto& f : plan.folds) {
                    lo = std::min(lo, f.size());
                    hi = std::max(hi, f.size());
                    for (auto i : f) {
                        if (i < n) ++seen[i];
                        else seen[0] = -1;
                    }
                }
                const bool ok = plan.folds.size() == static_cast<std::size_t>(k) && hi - lo <= 1 &&
                                std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
                bad_plans += ok ? 0 : 1;
            }

    auto raw = raw_samples(generate_synthetic(84, 5), 12);
    NetworkConfig net;
    net.layer_sizes = {feature_count(12), 5, 1};
    TrainConfig tc;
    tc.max_epochs = 50;
    const auto before = cross_validate(raw, 4, 9, FoldMode::shuffled, net, tc);
    bool leakage_ok = true;
    for (const auto& fold : before.per_fold) {
        auto perturbed = raw;
        for (auto i : fold.validation_indices) {
            for (auto& v : perturbed[i].features) v = v * 3.0 + 17.0;
            perturbed[i].target *= 5.0;
        }
        const auto after = cross_validate(perturbed, 4, 9, FoldMode::shuffled, net, tc);
        leakage_ok = leakage_ok &&
                     after.per_fold[static_cast<std::size_t>(fold.fold_index)].normalization ==
                         fold.normalization;
    }

    bool reduction_ok = true;
    for (auto mode : {FoldMode::shuffled, FoldMode::chronological}) {
        const auto kf = cross_validate(raw, 2, 4, mode, net, tc);
        const auto two = two_fold_validate(raw, 4, mode, net, tc);
        for (std::size_t j = 0; j < 2; ++j)
            reduction_ok = reduction_ok && kf.per_fold[j].report == two.per_fold[j].report &&
                           kf.per_fold[j].predictions == two.per_fold[j].predictions;
        reduction_ok = reduction_ok && kf.mean_report == two.mean_report &&
                       kf.final_model == two.final_model;
    }
    return {bad_plans == 0 && leakage_ok && reduction_ok,
            std::to_string(plans) + " plans, " + std::to_string(bad_plans) + " bad; leakage guard " +
                (leakage_ok ? "holds" : "BROKEN") + "; k=2 reduction " +
                (reduction_ok ? "exact" : "DIFFERS")};
}

// 6. Synthetic noiseless seasonal series, defaults, chronological folds.
Outcome end_to_end() {
    const auto t0 = Clock::now();
    SyntheticOptions opt;
    opt.noise = 0.0;
    const auto raw = raw_samples(generate_synthetic(240, kSyntheticSeed, opt), RunConfig{}.lag);
    const RunConfig cfg;
    const auto kfold = cross_validate(raw, cfg.k, cfg.seed_fold, FoldMode::chronological,
                                      cfg.network_config(), cfg.train_config());
    const auto twofold = two_fold_validate(raw, cfg.seed_fold, FoldMode::chronological,
                                           cfg.network_config(), cfg.train_config());
    const double secs = seconds_since(t0);
    const double mk = kfold.mean_report.mape_pct, m2 = twofold.mean_report.mape_pct;
    return {mk < kEndToEndMapePct && m2 < kEndToEndMapePct && secs < kEndToEndSeconds,
            "10-fold mean MAPE " + fmt(mk) + "%, 2-fold mean MAPE " + fmt(m2) + "%, " + fmt(secs) +
                " s"};
}

// 7. Byte-identical outputs across runs; model and normalization round-trips.
Outcome determinism() {
    testutil::TempDir a, b, data_dir;
    const auto data = data_dir / "history.csv";
    io::write_file(data, [&](std::ostream& os) { write_csv(os, generate_synthetic(120, 3)); });
    RunConfig cfg;
    cfg.data = data;
    cfg.k = 4;
    cfg.max_epochs = 200;
    std::ostringstream log;
    for (const auto* dir : {&a, &b}) {
        cfg.out = dir->path();
        cmd_train(cfg, log);
        cmd_validate(cfg, log);
        cmd_fixtures(cfg, log);
        cmd_plotdata(cfg, log);
    }
    int files = 0, differing = 0;
    for (const auto& entry : std::filesystem::directory_iterator(a.path())) {
        ++files;
        const auto name = entry.path().filename().string();
        if (io::read_file(entry.path()) != io::read_file(b / name)) ++differing;
    }

    const std::string model_text = io::read_file(a / "model.txt");
    const bool model_ok = save_model_string(load_model(model_text)) == model_text;

    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> u(-1e5, 1e5), w(1e-2, 1e5);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double lo = u(gen);
        const FeatureRange r{lo, lo + w(gen)};
        const double x = r.min + (r.max - r.min) * (u(gen) / 1e5 + 1.0) / 2.0;
        if (x == 0.0) continue;
        worst = std::max(worst, std::abs(denormalize(normalize(x, r), r) - x) / std::abs(x));
    }
    const FeatureRange published{74.98, 113.58};
    worst = std::max(worst, std::abs(denormalize(normalize(87.11, published), published) - 87.11) / 87.11);

    return {files > 0 && differing == 0 && model_ok && worst <= kRoundTripRel,
            std::to_string(files) + " output files compared, " + std::to_string(differing) +
                " differ; model round-trip " + (model_ok ? "byte-identical" : "DIFFERS") +
                "; normalize round-trip worst " + fmt(worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 metric fixtures vs high-precision oracle", fixture_metrics},
        {"2 metric property suite", metric_properties},
        {"3 gradient correctness", gradient_check},
        {"4 learnability", learnability},
        {"5 fold properties", fold_properties},
        {"6 desk-scale end-to-end", end_to_end},
        {"7 determinism and round-trips", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " : " << o.detail << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
