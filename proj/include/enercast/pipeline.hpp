#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "enercast/dataset.hpp"
#include "enercast/features.hpp"
#include "enercast/fixtures.hpp"
#include "enercast/forecast.hpp"
#include "enercast/model_io.hpp"
#include "enercast/run_config.hpp"
#include "enercast/train.hpp"
#include "enercast/validation.hpp"

namespace enercast {

namespace io {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes through a string so a failed command never leaves a partial file.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ostringstream os;
    writer(os);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out << os.str();
    if (!out) throw DataError("failed writing " + path.string());
}

inline Dataset load_dataset(const std::filesystem::path& path) {
    if (path.empty()) throw ConfigError("no data file given (--data)");
    const std::string content = read_file(path);
    try {
        return parse_csv(content);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

}  // namespace io

struct TrainOutcome {
    ForecastModel model;
    TrainReport report;
};

inline void write_train_report_csv(std::ostream& out, const TrainReport& r) {
    out << "epoch,mse\n";
    for (std::size_t i = 0; i < r.epoch_mse.size(); ++i)
        out << (i + 1) << ',' << text::format_exact(r.epoch_mse[i]) << '\n';
}

/// Fits the normalizer on every sample, trains one network, and writes
/// <model> plus <out>/train_report.csv.
inline TrainOutcome cmd_train(const RunConfig& cfg, std::ostream& log) {
    const Dataset data = io::load_dataset(cfg.data);
    const auto raw = raw_samples(data, cfg.lag);
    const auto params = fit_normalizer(raw);
    const auto samples = normalize_samples(raw, params);
    auto [net, report] = train(init_network(cfg.network_config()), samples, cfg.train_config());

    TrainOutcome outcome{{std::move(net), params, cfg.lag}, std::move(report)};
    const std::string text = save_model_string(outcome.model);
    if (save_model_string(load_model(text)) != text)
        throw NumericError("model file does not round-trip");
    io::write_file(cfg.model_path(), [&](std::ostream& os) { os << text; });
    io::write_file(cfg.out / "train_report.csv",
                   [&](std::ostream& os) { write_train_report_csv(os, outcome.report); });
    log << "trained on " << samples.size() << " samples: " << outcome.report.epochs_run
        << " epochs, stop=" << to_string(outcome.report.stop_reason)
        << ", final mse=" << text::format_exact(outcome.report.epoch_mse.back()) << '\n'
        << "model written to " << cfg.model_path().string() << '\n';
    return outcome;
}

struct ValidateOutcome {
    CrossValReport two_fold;
    CrossValReport k_fold;
};

/// Runs 2-fold and k-fold validation with shared seeds; writes
/// <out>/validation_2fold.csv and <out>/validation_kfold.csv.
inline ValidateOutcome cmd_validate(const RunConfig& cfg, std::ostream& log) {
    const Dataset data = io::load_dataset(cfg.data);
    const auto raw = raw_samples(data, cfg.lag);
    const CrossValOptions options{cfg.parallel};
    ValidateOutcome out{
        two_fold_validate(raw, cfg.seed_fold, cfg.mode, cfg.network_config(), cfg.train_config(),
                          options),
        cross_validate(raw, cfg.k, cfg.seed_fold, cfg.mode, cfg.network_config(),
                       cfg.train_config(), options)};
    io::write_file(cfg.out / "validation_2fold.csv",
                   [&](std::ostream& os) { write_crossval_csv(os, out.two_fold); });
    io::write_file(cfg.out / "validation_kfold.csv",
                   [&](std::ostream& os) { write_crossval_csv(os, out.k_fold); });
    log << to_string(cfg.mode) << " folds; the mean row is the unweighted mean over folds\n"
        << "2-fold mean MAPE " << text::format_fixed(out.two_fold.mean_report.mape_pct, 6)
        << "%\n"
        << cfg.k << "-fold mean MAPE " << text::format_fixed(out.k_fold.mean_report.mape_pct, 6)
        << "%\n";
    return out;
}

/// Recursive forecast with the saved model over <horizon> months after the
/// end of <data>, exogenous inputs from <scenario>; writes <out>/forecast.csv.
inline ForecastTable cmd_forecast(const RunConfig& cfg, std::ostream& log) {
    const ForecastModel model = load_model(io::read_file(cfg.model_path()));
    const Dataset history = io::load_dataset(cfg.data);
    if (cfg.scenario.empty()) throw ConfigError("no scenario file given (--scenario)");
    const std::string scenario_text = io::read_file(cfg.scenario);
    Dataset scenario;
    try {
        scenario = parse_scenario_csv(scenario_text);
    } catch (const DataError& e) {
        throw ScenarioError(cfg.scenario.string() + ": " + e.what());
    }
    ForecastTable table = recursive_forecast(model, history, scenario, cfg.horizon);
    io::write_file(cfg.out / "forecast.csv",
                   [&](std::ostream& os) { write_forecast_csv(os, table); });
    log << "forecast " << table.rows.size() << " months from " << to_string(table.rows.front().when)
        << " with the model trained on all samples\n";
    return table;
}

/// With --data, --forecast-2fold and --forecast-kfold: joins them into
/// <out>/plot.csv. Without them: writes the 2012 and 2013 fixture plot data.
inline void cmd_plotdata(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.forecast_2fold.empty() || !cfg.forecast_kfold.empty()) {
        if (cfg.forecast_2fold.empty() || cfg.forecast_kfold.empty() || cfg.data.empty())
            throw ConfigError("plotdata needs --data, --forecast-2fold and --forecast-kfold");
        const Dataset data = io::load_dataset(cfg.data);
        const auto two = parse_forecast_csv(io::read_file(cfg.forecast_2fold));
        const auto kf = parse_forecast_csv(io::read_file(cfg.forecast_kfold));
        const auto actual = with_actuals(two, data);
        io::write_file(cfg.out / "plot.csv",
                       [&](std::ostream& os) { emit_plot_data(os, actual, two, kf); });
        log << "wrote " << (cfg.out / "plot.csv").string() << '\n';
        return;
    }
    for (const auto* fx : {&kFixture2012, &kFixture2013}) {
        const auto t = fixture_forecast_tables(*fx);
        const auto path = cfg.out / ("plot_" + std::to_string(fx->year) + ".csv");
        io::write_file(path, [&](std::ostream& os) {
            emit_plot_data(os, t.actual, t.forecast_2fold, t.forecast_kfold);
        });
        log << "wrote " << path.string() << '\n';
    }
}

/// Writes the embedded 2012/2013 tables and their metric reports.
inline FixtureTables cmd_fixtures(const RunConfig& cfg, std::ostream& log) {
    FixtureTables tables = load_fixture_tables();
    for (const auto* fx : {&kFixture2012, &kFixture2013}) {
        const auto t = fixture_forecast_tables(*fx);
        io::write_file(cfg.out / ("fixture_" + std::to_string(fx->year) + ".csv"),
                       [&](std::ostream& os) {
                           emit_plot_data(os, t.actual, t.forecast_2fold, t.forecast_kfold);
                       });
    }
    auto report = [&](const char* name, const SeriesPair& s) {
        io::write_file(cfg.out / name,
                       [&](std::ostream& os) { write_report_csv(os, compute_report(s)); });
    };
    report("metrics_2012_2fold.csv", tables.actual_vs_2fold_2012);
    report("metrics_2012_kfold.csv", tables.actual_vs_kfold_2012);
    report("metrics_2013_2fold.csv", tables.actual_vs_2fold_2013);
    report("metrics_2013_kfold.csv", tables.actual_vs_kfold_2013);
    log << "fixture checksum " << std::hex << fixture_checksum() << std::dec << '\n';
    return tables;
}

}  // namespace enercast
