#pragma once

#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include "enercast/ann.hpp"
#include "enercast/features.hpp"

namespace enercast {

/// A trained network together with what is needed to feed it: the lag window
/// and the normalizer it was trained under.
struct ForecastModel {
    Network network;
    NormalizationParams normalization;
    std::size_t lag_window = 12;

    friend bool operator==(const ForecastModel&, const ForecastModel&) = default;
};

inline constexpr std::string_view kModelHeader = "enercast-model v1";

namespace detail {

inline std::string join_exact(std::span<const double> values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += text::format_exact(values[i]);
    }
    return s;
}

}  // namespace detail

/// Line-oriented text format: header, key=value config lines, then for each
/// layer its weight rows followed by one bias row. Numbers carry 17
/// significant digits, so save -> load -> save is byte-identical.
inline void save_model(std::ostream& out, const ForecastModel& m) {
    const auto& cfg = m.network.config;
    out << kModelHeader << '\n';
    out << "layer_sizes=";
    for (std::size_t i = 0; i < cfg.layer_sizes.size(); ++i)
        out << (i ? "," : "") << cfg.layer_sizes[i];
    out << '\n';
    out << "hidden_activation=" << to_string(cfg.hidden_activation) << '\n';
    out << "output_activation=" << to_string(cfg.output_activation) << '\n';
    out << "init_seed=" << cfg.init_seed << '\n';
    out << "init_scale=" << text::format_exact(cfg.init_scale) << '\n';
    out << "lag_window=" << m.lag_window << '\n';
    std::vector<double> mins, maxs;
    for (const auto& r : m.normalization.features) {
        mins.push_back(r.min);
        maxs.push_back(r.max);
    }
    out << "feature_min=" << detail::join_exact(mins) << '\n';
    out << "feature_max=" << detail::join_exact(maxs) << '\n';
    out << "target_min=" << text::format_exact(m.normalization.target.min) << '\n';
    out << "target_max=" << text::format_exact(m.normalization.target.max) << '\n';
    for (const auto& layer : m.network.params.layers) {
        for (std::size_t r = 0; r < layer.fan_out; ++r)
            out << detail::join_exact(std::span<const double>(
                       layer.weights.data() + r * layer.fan_in, layer.fan_in))
                << '\n';
        out << detail::join_exact(layer.bias) << '\n';
    }
}

inline std::string save_model_string(const ForecastModel& m) {
    std::ostringstream os;
    save_model(os, m);
    return os.str();
}

inline ForecastModel load_model(std::string_view content) {
    const auto rows = text::lines(content);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ModelFormatError {
        return ModelFormatError("model line " + std::to_string(pos + 1) + ": " + why);
    };
    if (rows.empty() || rows[0] != kModelHeader) throw ModelFormatError("missing model header");
    ++pos;

    auto value_of = [&](std::string_view key) {
        if (pos >= rows.size()) throw fail("unexpected end of file, wanted " + std::string(key));
        const auto line = rows[pos];
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || line.substr(0, eq) != key)
            throw fail("expected key '" + std::string(key) + "'");
        ++pos;
        return line.substr(eq + 1);
    };
    auto reals = [&](std::string_view csv, std::size_t expect) {
        std::vector<double> out;
        for (auto f : text::split(csv, ',')) {
            auto v = text::parse_double(f);
            if (!v) throw fail("bad number '" + std::string(f) + "'");
            out.push_back(*v);
        }
        if (out.size() != expect)
            throw fail("expected " + std::to_string(expect) + " values, got " +
                       std::to_string(out.size()));
        return out;
    };
    auto real = [&](std::string_view s) { return reals(s, 1).front(); };
    auto integer = [&](std::string_view s) {
        auto v = text::parse_int<std::uint64_t>(s);
        if (!v) throw fail("bad integer '" + std::string(s) + "'");
        return *v;
    };

    ForecastModel m;
    auto& cfg = m.network.config;
    cfg.layer_sizes.clear();
    for (auto f : text::split(value_of("layer_sizes"), ','))
        cfg.layer_sizes.push_back(static_cast<std::size_t>(integer(f)));
    try {
        cfg.hidden_activation = parse_activation(value_of("hidden_activation"));
        cfg.output_activation = parse_activation(value_of("output_activation"));
    } catch (const ConfigError& e) {
        throw fail(e.what());
    }
    cfg.init_seed = integer(value_of("init_seed"));
    cfg.init_scale = real(value_of("init_scale"));
    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        throw ModelFormatError(std::string("invalid network config: ") + e.what());
    }
    m.lag_window = static_cast<std::size_t>(integer(value_of("lag_window")));
    const std::size_t inputs = cfg.layer_sizes.front();
    if (feature_count(m.lag_window) != inputs)
        throw ModelFormatError("lag_window " + std::to_string(m.lag_window) +
                               " does not match input size " + std::to_string(inputs));
    const auto mins = reals(value_of("feature_min"), inputs);
    const auto maxs = reals(value_of("feature_max"), inputs);
    for (std::size_t i = 0; i < inputs; ++i) m.normalization.features.push_back({mins[i], maxs[i]});
    m.normalization.target.min = real(value_of("target_min"));
    m.normalization.target.max = real(value_of("target_max"));

    for (std::size_t li = 0; li + 1 < cfg.layer_sizes.size(); ++li) {
        Layer layer(cfg.layer_sizes[li], cfg.layer_sizes[li + 1]);
        for (std::size_t r = 0; r < layer.fan_out; ++r) {
            if (pos >= rows.size()) throw fail("missing weight row");
            const auto row = reals(rows[pos++], layer.fan_in);
            std::copy(row.begin(), row.end(), layer.weights.begin() + r * layer.fan_in);
        }
        if (pos >= rows.size()) throw fail("missing bias row");
        layer.bias = reals(rows[pos++], layer.fan_out);
        m.network.params.layers.push_back(std::move(layer));
    }
    if (pos != rows.size()) throw fail("trailing content");
    return m;
}

inline ForecastModel load_model(std::istream& in) {
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load_model(content);
}

}  // namespace enercast
