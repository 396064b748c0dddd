#pragma once

#include <functional>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "enercast/dataset.hpp"
#include "enercast/model_io.hpp"

namespace enercast {

struct ForecastRow {
    YearMonth when;
    std::optional<double> actual;
    double forecast = 0.0;

    friend bool operator==(const ForecastRow&, const ForecastRow&) = default;
};

/// Monthly forecasts in physical units over contiguous months.
struct ForecastTable {
    std::vector<ForecastRow> rows;

    friend bool operator==(const ForecastTable&, const ForecastTable&) = default;
};

/// Called once per forecast month with the raw (physical-unit) feature vector
/// that was fed to the network.
using FeatureObserver = std::function<void(YearMonth, std::span<const double>)>;

/// Recursive multi-step forecast. Month t+1's lag inputs include the forecast
/// for month t. Exogenous factors come from `scenario`, which must contain
/// `horizon` contiguous months starting right after the last historical one.
inline ForecastTable recursive_forecast(const ForecastModel& model, const Dataset& history,
                                        const Dataset& scenario, int horizon,
                                        const FeatureObserver& observe = {}) {
    if (horizon < 1) throw ConfigError("horizon must be >= 1");
    if (history.size() < model.lag_window)
        throw FeaturizeError("history has " + std::to_string(history.size()) +
                             " months, model needs " + std::to_string(model.lag_window));
    const YearMonth first = history.back().when().next();
    std::size_t start = scenario.size();
    for (std::size_t i = 0; i < scenario.size(); ++i)
        if (scenario[i].when() == first) {
            start = i;
            break;
        }
    if (start == scenario.size() || scenario.size() - start < static_cast<std::size_t>(horizon))
        throw ScenarioError("scenario must cover " + std::to_string(horizon) +
                            " months starting at " + to_string(first));

    std::vector<double> window;
    for (std::size_t i = history.size() - model.lag_window; i < history.size(); ++i)
        window.push_back(history[i].consumption);

    ForecastTable table;
    for (int h = 0; h < horizon; ++h) {
        const MonthlyRecord& month = scenario[start + static_cast<std::size_t>(h)];
        const auto raw = raw_features(window, month);
        if (observe) observe(month.when(), raw);
        const double z = predict(model.network, normalize_features(raw, model.normalization));
        const double y = denormalize(z, model.normalization.target);
        if (!std::isfinite(y)) throw NumericError("non-finite forecast at " + to_string(month.when()));
        table.rows.push_back({month.when(), std::nullopt, y});
        if (!window.empty()) {
            window.erase(window.begin());
            window.push_back(y);
        }
    }
    return table;
}

inline constexpr std::string_view kForecastHeader = "year,month,actual,forecast";

inline void write_forecast_csv(std::ostream& out, const ForecastTable& t) {
    out << kForecastHeader << '\n';
    for (const auto& r : t.rows) {
        out << r.when.year << ',' << r.when.month << ','
            << (r.actual ? text::format_fixed(*r.actual, 6) : std::string{}) << ','
            << text::format_fixed(r.forecast, 6) << '\n';
    }
}

inline ForecastTable parse_forecast_csv(std::string_view content) {
    const auto rows = text::lines(content);
    if (rows.empty() || rows[0] != kForecastHeader)
        throw ParseError(1, "expected header '" + std::string(kForecastHeader) + "'");
    ForecastTable t;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = text::split(rows[i], ',');
        if (f.size() != 4) throw ParseError(i + 1, "expected 4 fields");
        auto year = text::parse_int<int>(f[0]);
        auto month = text::parse_int<int>(f[1]);
        auto forecast = text::parse_double(f[3]);
        if (!year || !month || !forecast || *month < 1 || *month > 12)
            throw ParseError(i + 1, "malformed forecast row");
        ForecastRow row{{*year, *month}, std::nullopt, *forecast};
        if (!text::trim(f[2]).empty()) {
            auto a = text::parse_double(f[2]);
            if (!a) throw ParseError(i + 1, "malformed actual value");
            row.actual = *a;
        }
        if (!t.rows.empty() && row.when != t.rows.back().when.next())
            throw ContinuityError("forecast months not contiguous at line " + std::to_string(i + 1));
        t.rows.push_back(row);
    }
    return t;
}

/// Plot-ready CSV `month,actual,forecast_2fold,forecast_kfold`. Actual values
/// come from `actual.rows[i].actual`; all three tables must cover the same
/// months.
inline void emit_plot_data(std::ostream& out, const ForecastTable& actual,
                           const ForecastTable& forecast_2fold,
                           const ForecastTable& forecast_kfold) {
    if (actual.rows.size() != forecast_2fold.rows.size() ||
        actual.rows.size() != forecast_kfold.rows.size())
        throw AlignmentError("plot tables have different lengths");
    for (std::size_t i = 0; i < actual.rows.size(); ++i) {
        const auto when = actual.rows[i].when;
        if (forecast_2fold.rows[i].when != when || forecast_kfold.rows[i].when != when)
            throw AlignmentError("plot tables disagree on month at row " + std::to_string(i));
        if (!actual.rows[i].actual)
            throw AlignmentError("no actual value for " + to_string(when));
    }
    out << "month,actual,forecast_2fold,forecast_kfold\n";
    for (std::size_t i = 0; i < actual.rows.size(); ++i) {
        out << to_string(actual.rows[i].when) << ',' << text::format_shortest(*actual.rows[i].actual)
            << ',' << text::format_shortest(forecast_2fold.rows[i].forecast) << ','
            << text::format_shortest(forecast_kfold.rows[i].forecast) << '\n';
    }
}

/// Fills each row's actual value from `data` where the month is present.
inline ForecastTable with_actuals(ForecastTable t, const Dataset& data) {
    for (auto& row : t.rows)
        for (const auto& r : data.records())
            if (r.when() == row.when) row.actual = r.consumption;
    return t;
}

}  // namespace enercast
