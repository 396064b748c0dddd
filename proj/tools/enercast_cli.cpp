// enercast: train, validate and forecast monthly electricity consumption.
//
//   enercast train    --data history.csv --out run/
//   enercast validate --data history.csv --k 10 --out run/
//   enercast forecast --data history.csv --scenario future.csv --horizon 12 --out run/
//   enercast plotdata --out plots/
//   enercast fixtures --out fixtures/
//   enercast synth    --months 240 --seed 7 --out history.csv
//
// Exit status: 0 success, 2 usage/config error, 3 data error, 4 numeric error.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "enercast/enercast.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct CommandOptions {
    std::string config;
    std::map<std::string, std::string> values;
};

void add_run_options(CLI::App& cmd, CommandOptions& opts) {
    cmd.add_option("--config", opts.config, "key=value config file; flags override it");
    for (auto key : enercast::run_config_keys()) {
        const std::string name(key);
        cmd.add_option("--" + name, opts.values[name]);
    }
}

enercast::RunConfig resolve(const CLI::App& cmd, const CommandOptions& opts) {
    enercast::RunConfig cfg;
    if (!opts.config.empty()) enercast::apply_config_file(cfg, opts.config);
    for (const auto& [key, value] : opts.values)
        if (cmd.count("--" + key) > 0) enercast::apply_setting(cfg, key, value);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monthly electricity consumption forecasting with a feedforward network"};
    app.require_subcommand(1);

    CommandOptions train_opts, validate_opts, forecast_opts, plot_opts, fixture_opts;
    auto* train_cmd = app.add_subcommand("train", "train one network on all samples");
    add_run_options(*train_cmd, train_opts);
    auto* validate_cmd = app.add_subcommand("validate", "2-fold and k-fold cross validation");
    add_run_options(*validate_cmd, validate_opts);
    auto* forecast_cmd = app.add_subcommand("forecast", "recursive multi-month forecast");
    add_run_options(*forecast_cmd, forecast_opts);
    auto* plot_cmd = app.add_subcommand("plotdata", "emit actual vs forecast plot data");
    add_run_options(*plot_cmd, plot_opts);
    auto* fixture_cmd = app.add_subcommand("fixtures", "emit the published 2012/2013 tables");
    add_run_options(*fixture_cmd, fixture_opts);

    int months = 240;
    std::uint64_t seed = 7;
    double noise = 1.0;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic monthly dataset");
    synth_cmd->add_option("--months", months, "number of months (>= 24)");
    synth_cmd->add_option("--seed", seed, "generator seed");
    synth_cmd->add_option("--noise", noise, "consumption noise std-dev, GWh");
    synth_cmd->add_option("--out", synth_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*train_cmd) {
            enercast::cmd_train(resolve(*train_cmd, train_opts), std::cout);
        } else if (*validate_cmd) {
            enercast::cmd_validate(resolve(*validate_cmd, validate_opts), std::cout);
        } else if (*forecast_cmd) {
            enercast::cmd_forecast(resolve(*forecast_cmd, forecast_opts), std::cout);
        } else if (*plot_cmd) {
            enercast::cmd_plotdata(resolve(*plot_cmd, plot_opts), std::cout);
        } else if (*fixture_cmd) {
            enercast::cmd_fixtures(resolve(*fixture_cmd, fixture_opts), std::cout);
        } else if (*synth_cmd) {
            enercast::SyntheticOptions opt;
            opt.noise = noise;
            const auto data = enercast::generate_synthetic(months, seed, opt);
            enercast::io::write_file(synth_out,
                                     [&](std::ostream& os) { enercast::write_csv(os, data); });
            std::cout << "wrote " << data.size() << " months to " << synth_out << '\n';
        }
    } catch (const enercast::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const enercast::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const enercast::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
