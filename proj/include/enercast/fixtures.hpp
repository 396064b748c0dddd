#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "enercast/forecast.hpp"
#include "enercast/metrics.hpp"

namespace enercast {

/// Published monthly actuals and the forecasts of the 2-fold and k-fold
/// models for one year, January first. Values are stored as printed.
struct YearFixture {
    int year;
    std::array<double, 12> actual;
    std::array<double, 12> forecast_2fold;
    std::array<double, 12> forecast_kfold;
};

inline constexpr YearFixture kFixture2012{
    2012,
    {113.5800, 110.5200, 85.3500, 74.9800, 87.1100, 86.1000, 90.4600, 103.1600, 108.6600,
     99.8500, 98.5000, 90.8400},
    {111.7538, 109.7213, 86.6753, 75.2086, 88.7946, 87.5484, 90.0263, 102.9062, 107.4464,
     100.7179, 99.9205, 93.4780},
    {119.9518, 109.1621, 87.8927, 80.8937, 90.4256, 88.8709, 90.3327, 90.3061, 108.2806,
     90.4634, 99.8268, 90.8787},
};

inline constexpr YearFixture kFixture2013{
    2013,
    {110.34, 110.67, 90.776, 94.66, 88.93, 91.443, 101.82, 111.741, 106.772, 101.92, 98.43,
     92.53},
    {109.2616, 109.3688, 92.9769, 97.1215, 90.8877, 93.723, 102.7202, 109.7194, 105.0375,
     102.7778, 100.4408, 90.4837},
    {110.0026, 110.1573, 91.2542, 100.4115, 89.2735, 94.6202, 100.2111, 110.7063, 108.7167,
     100.2537, 100.0337, 96.5896},
};

struct FixtureTables {
    SeriesPair actual_vs_2fold_2012;
    SeriesPair actual_vs_kfold_2012;
    SeriesPair actual_vs_2fold_2013;
    SeriesPair actual_vs_kfold_2013;
};

inline FixtureTables load_fixture_tables() {
    auto pair = [](const std::array<double, 12>& a, const std::array<double, 12>& f) {
        return SeriesPair({a.begin(), a.end()}, {f.begin(), f.end()});
    };
    return {pair(kFixture2012.actual, kFixture2012.forecast_2fold),
            pair(kFixture2012.actual, kFixture2012.forecast_kfold),
            pair(kFixture2013.actual, kFixture2013.forecast_2fold),
            pair(kFixture2013.actual, kFixture2013.forecast_kfold)};
}

/// FNV-1a over every fixture value printed with 4 decimals, in declaration
/// order. Any edit to the embedded tables changes it.
inline std::uint64_t fixture_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](double v) {
        for (char c : text::format_fixed(v, 4) + ";") {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto* fx : {&kFixture2012, &kFixture2013}) {
        for (double v : fx->actual) feed(v);
        for (double v : fx->forecast_2fold) feed(v);
        for (double v : fx->forecast_kfold) feed(v);
    }
    return h;
}

struct FixtureForecasts {
    ForecastTable actual;
    ForecastTable forecast_2fold;
    ForecastTable forecast_kfold;
};

inline FixtureForecasts fixture_forecast_tables(const YearFixture& fx) {
    FixtureForecasts out;
    for (int m = 0; m < 12; ++m) {
        const YearMonth when{fx.year, m + 1};
        const auto i = static_cast<std::size_t>(m);
        out.actual.rows.push_back({when, fx.actual[i], fx.actual[i]});
        out.forecast_2fold.rows.push_back({when, fx.actual[i], fx.forecast_2fold[i]});
        out.forecast_kfold.rows.push_back({when, fx.actual[i], fx.forecast_kfold[i]});
    }
    return out;
}

}  // namespace enercast
