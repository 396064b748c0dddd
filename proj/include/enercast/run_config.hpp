#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "enercast/ann.hpp"
#include "enercast/features.hpp"
#include "enercast/train.hpp"
#include "enercast/validation.hpp"

namespace enercast {

/// Everything a command needs. Keys in a config file and CLI flag names are
/// the same strings (see apply_setting).
struct RunConfig {
    std::filesystem::path data;
    std::filesystem::path scenario;
    std::filesystem::path model;  // defaults to <out>/model.txt
    std::filesystem::path forecast_2fold;
    std::filesystem::path forecast_kfold;
    std::filesystem::path out = ".";
    std::size_t lag = 12;
    int k = 10;
    FoldMode mode = FoldMode::chronological;
    std::uint64_t seed_init = 1;
    std::uint64_t seed_shuffle = 2;
    std::uint64_t seed_fold = 3;
    std::vector<std::size_t> hidden{10};
    Activation hidden_activation = Activation::sigmoid;
    Activation output_activation = Activation::linear;
    double init_scale = 1.0;
    double learning_rate = TrainConfig{}.learning_rate;
    int max_epochs = TrainConfig{}.max_epochs;
    double mse_tolerance = TrainConfig{}.mse_tolerance;
    int patience = TrainConfig{}.patience;
    int horizon = 12;
    bool parallel = false;

    std::filesystem::path model_path() const { return model.empty() ? out / "model.txt" : model; }

    NetworkConfig network_config() const {
        NetworkConfig cfg;
        cfg.layer_sizes.clear();
        cfg.layer_sizes.push_back(feature_count(lag));
        cfg.layer_sizes.insert(cfg.layer_sizes.end(), hidden.begin(), hidden.end());
        cfg.layer_sizes.push_back(1);
        cfg.hidden_activation = hidden_activation;
        cfg.output_activation = output_activation;
        cfg.init_seed = seed_init;
        cfg.init_scale = init_scale;
        return cfg;
    }

    TrainConfig train_config() const {
        return {learning_rate, max_epochs, mse_tolerance, patience, seed_shuffle};
    }
};

inline const std::vector<std::string_view>& run_config_keys() {
    static const std::vector<std::string_view> keys{
        "data",       "scenario",          "model",          "forecast-2fold", "forecast-kfold",
        "out",        "lag",               "k",              "mode",           "seed-init",
        "seed-shuffle", "seed-fold",       "hidden",         "hidden-activation",
        "output-activation", "init-scale", "learning-rate",  "max-epochs",     "mse-tolerance",
        "patience",   "horizon",           "parallel"};
    return keys;
}

/// Sets one field from its textual form; throws ConfigError on unknown keys
/// or unparsable values.
inline void apply_setting(RunConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string_view value = text::trim(raw);
    auto bad = [&]() {
        return ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
    };
    auto to_u64 = [&] {
        auto v = text::parse_int<std::uint64_t>(value);
        if (!v) throw bad();
        return *v;
    };
    auto to_int = [&] {
        auto v = text::parse_int<int>(value);
        if (!v) throw bad();
        return *v;
    };
    auto to_real = [&] {
        auto v = text::parse_double(value);
        if (!v) throw bad();
        return *v;
    };

    if (key == "data") cfg.data = std::string(value);
    else if (key == "scenario") cfg.scenario = std::string(value);
    else if (key == "model") cfg.model = std::string(value);
    else if (key == "forecast-2fold") cfg.forecast_2fold = std::string(value);
    else if (key == "forecast-kfold") cfg.forecast_kfold = std::string(value);
    else if (key == "out") cfg.out = std::string(value);
    else if (key == "lag") {
        const int v = to_int();
        if (v < 1) throw bad();
        cfg.lag = static_cast<std::size_t>(v);
    } else if (key == "k") cfg.k = to_int();
    else if (key == "mode") cfg.mode = parse_fold_mode(value);
    else if (key == "seed-init") cfg.seed_init = to_u64();
    else if (key == "seed-shuffle") cfg.seed_shuffle = to_u64();
    else if (key == "seed-fold") cfg.seed_fold = to_u64();
    else if (key == "hidden") {
        cfg.hidden.clear();
        for (auto part : text::split(value, ',')) {
            auto v = text::parse_int<std::size_t>(part);
            if (!v || *v < 1) throw bad();
            cfg.hidden.push_back(*v);
        }
    } else if (key == "hidden-activation") cfg.hidden_activation = parse_activation(value);
    else if (key == "output-activation") cfg.output_activation = parse_activation(value);
    else if (key == "init-scale") cfg.init_scale = to_real();
    else if (key == "learning-rate") cfg.learning_rate = to_real();
    else if (key == "max-epochs") cfg.max_epochs = to_int();
    else if (key == "mse-tolerance") cfg.mse_tolerance = to_real();
    else if (key == "patience") cfg.patience = to_int();
    else if (key == "horizon") {
        cfg.horizon = to_int();
        if (cfg.horizon < 1) throw bad();
    } else if (key == "parallel") {
        if (value == "true" || value == "1") cfg.parallel = true;
        else if (value == "false" || value == "0") cfg.parallel = false;
        else throw bad();
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

/// Config file: one `key=value` per line; blank lines and lines starting
/// with '#' are skipped.
inline void apply_config_text(RunConfig& cfg, std::string_view content) {
    std::size_t n = 0;
    for (auto line : text::lines(content)) {
        ++n;
        line = text::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(n) + ": expected key=value");
        apply_setting(cfg, text::trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

inline void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_text(cfg, ss.str());
}

}  // namespace enercast
