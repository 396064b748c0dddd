#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enercast/error.hpp"
#include "enercast/random.hpp"
#include "enercast/text.hpp"

namespace enercast {

struct YearMonth {
    int year = 0;
    int month = 0;  // 1..12

    /// Months since year 0, used for continuity checks.
    constexpr long ordinal() const { return static_cast<long>(year) * 12 + (month - 1); }
    static constexpr YearMonth from_ordinal(long ord) {
        return {static_cast<int>(ord / 12), static_cast<int>(ord % 12) + 1};
    }
    constexpr YearMonth next() const { return from_ordinal(ordinal() + 1); }

    friend constexpr auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

inline std::string to_string(YearMonth ym) {
    std::string m = std::to_string(ym.month);
    return std::to_string(ym.year) + "-" + (m.size() == 1 ? "0" + m : m);
}

/// One month of observations. Consumption is in GWh, temperature in degrees
/// Celsius, humidity in percent.
struct MonthlyRecord {
    int year = 0;
    int month = 0;
    double consumption = 0.0;
    double temperature = 0.0;
    double humidity = 0.0;
    double population = 0.0;
    double gdp_per_capita = 0.0;

    YearMonth when() const { return {year, month}; }

    friend bool operator==(const MonthlyRecord&, const MonthlyRecord&) = default;
};

inline constexpr std::string_view kDatasetHeader =
    "year,month,consumption_gwh,temperature_c,humidity_pct,population,gdp_per_capita";

namespace detail {

// Checks the per-record field ranges; `row` is the 1-based CSV line (0 when
// the record did not come from a file).
inline void check_record(const MonthlyRecord& r, std::size_t row, bool check_consumption) {
    auto fail = [&](const char* field, const std::string& why) {
        std::string where = row ? "row " + std::to_string(row) : to_string(r.when());
        throw ValidationError(std::string(field) + " " + why + " at " + where);
    };
    if (r.month < 1 || r.month > 12) fail("month", "must be in [1,12]");
    auto finite = [&](const char* field, double v) {
        if (!std::isfinite(v)) fail(field, "must be finite");
    };
    finite("temperature_c", r.temperature);
    finite("humidity_pct", r.humidity);
    finite("population", r.population);
    finite("gdp_per_capita", r.gdp_per_capita);
    if (check_consumption) {
        finite("consumption_gwh", r.consumption);
        if (!(r.consumption > 0.0)) fail("consumption_gwh", "must be > 0");
    }
    if (r.humidity < 0.0 || r.humidity > 100.0) fail("humidity_pct", "must be in [0,100]");
    if (!(r.population > 0.0)) fail("population", "must be > 0");
}

inline void check_continuity(std::span<const MonthlyRecord> records) {
    if (records.empty()) throw ContinuityError("dataset is empty");
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto prev = records[i - 1].when();
        const auto cur = records[i].when();
        if (cur.ordinal() == prev.ordinal())
            throw ContinuityError("duplicate month (" + std::to_string(cur.year) + "," +
                                  std::to_string(cur.month) + ")");
        if (cur.ordinal() != prev.ordinal() + 1)
            throw ContinuityError("missing month(s) between " + to_string(prev) + " and " +
                                  to_string(cur));
    }
}

}  // namespace detail

/// An ordered, gap-free monthly series. Construction validates every record.
class Dataset {
public:
    Dataset() = default;

    /// Sorts by (year, month) and then verifies ranges and continuity.
    explicit Dataset(std::vector<MonthlyRecord> records, bool check_consumption = true)
        : records_(std::move(records)) {
        std::stable_sort(records_.begin(), records_.end(),
                         [](const auto& a, const auto& b) { return a.when() < b.when(); });
        for (const auto& r : records_) detail::check_record(r, 0, check_consumption);
        detail::check_continuity(records_);
    }

    std::span<const MonthlyRecord> records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    const MonthlyRecord& operator[](std::size_t i) const { return records_[i]; }
    const MonthlyRecord& front() const { return records_.front(); }
    const MonthlyRecord& back() const { return records_.back(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<MonthlyRecord> records_;
};

namespace detail {

inline std::vector<MonthlyRecord> parse_rows(std::string_view content, bool check_consumption) {
    if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
    const auto rows = text::lines(content);
    if (rows.empty() || rows[0] != kDatasetHeader)
        throw ParseError(1, "expected header '" + std::string(kDatasetHeader) + "'");

    std::vector<MonthlyRecord> out;
    out.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::size_t line = i + 1;
        if (text::trim(rows[i]).empty()) continue;
        const auto f = text::split(rows[i], ',');
        if (f.size() != 7)
            throw ParseError(line, "expected 7 fields, got " + std::to_string(f.size()));

        auto integer = [&](std::size_t col, const char* name) {
            auto v = text::parse_int<int>(f[col]);
            if (!v) throw ParseError(line, std::string("non-integer ") + name + " '" +
                                               std::string(f[col]) + "'");
            return *v;
        };
        auto real = [&](std::size_t col, const char* name) {
            auto v = text::parse_double(f[col]);
            if (!v || !std::isfinite(*v))
                throw ParseError(line, std::string("non-numeric ") + name + " '" +
                                           std::string(f[col]) + "'");
            return *v;
        };

        MonthlyRecord r;
        r.year = integer(0, "year");
        r.month = integer(1, "month");
        if (check_consumption) {
            r.consumption = real(2, "consumption_gwh");
        } else if (auto c = text::parse_double(f[2])) {
            r.consumption = *c;
        }
        r.temperature = real(3, "temperature_c");
        r.humidity = real(4, "humidity_pct");
        r.population = real(5, "population");
        r.gdp_per_capita = real(6, "gdp_per_capita");
        check_record(r, line, check_consumption);
        out.push_back(r);
    }
    return out;
}

}  // namespace detail

/// Parses the dataset CSV format (see kDatasetHeader).
inline Dataset parse_csv(std::string_view content) {
    return Dataset(detail::parse_rows(content, true));
}

inline Dataset parse_csv(std::istream& in) {
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_csv(content);
}

/// Same schema as parse_csv, but the consumption column is ignored (it may be
/// blank). Used for exogenous scenarios of future months.
inline Dataset parse_scenario_csv(std::string_view content) {
    return Dataset(detail::parse_rows(content, false), false);
}

inline void write_csv(std::ostream& out, const Dataset& d) {
    out << kDatasetHeader << '\n';
    for (const auto& r : d.records()) {
        out << r.year << ',' << r.month << ',' << text::format_exact(r.consumption) << ','
            << text::format_exact(r.temperature) << ',' << text::format_exact(r.humidity) << ','
            << text::format_exact(r.population) << ',' << text::format_exact(r.gdp_per_capita)
            << '\n';
    }
}

struct SyntheticOptions {
    int start_year = 1994;
    int start_month = 1;
    double base_consumption = 60.0;   // GWh at the first month
    double trend_per_month = 0.2;     // GWh added per month
    double seasonal_amplitude = 8.0;  // GWh, peak in January
    double noise = 1.0;               // std-dev of consumption noise, GWh
    double exogenous_noise = 0.5;     // scales noise on temperature/humidity/GDP
};

/// Deterministic stand-in for a historical series: linear trend plus a
/// 12-month cosine seasonality plus Gaussian noise, with exogenous factors
/// that follow the same calendar.
inline Dataset generate_synthetic(int months, std::uint64_t seed,
                                  const SyntheticOptions& opt = {}) {
    if (months < 24)
        throw GenerationError("synthetic dataset needs at least 24 months, got " +
                              std::to_string(months));
    constexpr double two_pi = 6.28318530717958647692;
    Rng rng(seed);
    std::vector<MonthlyRecord> out;
    out.reserve(static_cast<std::size_t>(months));
    YearMonth ym{opt.start_year, opt.start_month};
    for (int t = 0; t < months; ++t, ym = ym.next()) {
        const double phase = two_pi * (ym.month - 1) / 12.0;
        const double season = std::cos(phase);
        MonthlyRecord r;
        r.year = ym.year;
        r.month = ym.month;
        const double clean = opt.base_consumption + opt.trend_per_month * t +
                             opt.seasonal_amplitude * season;
        const double eps = rng.normal();
        r.consumption = opt.noise == 0.0 ? clean : clean + opt.noise * eps;
        r.consumption = std::max(r.consumption, 0.01 * std::abs(clean) + 1e-6);
        r.temperature = 20.0 - 7.0 * season + opt.exogenous_noise * rng.normal();
        r.humidity = std::clamp(68.0 + 6.0 * std::sin(phase) + 2.0 * opt.exogenous_noise * rng.normal(),
                                0.0, 100.0);
        r.population = 750000.0 * std::pow(1.0 + 0.035 / 12.0, t);
        r.gdp_per_capita = 1200.0 + 3.0 * t + 10.0 * opt.exogenous_noise * rng.normal();
        out.push_back(r);
    }
    return Dataset(std::move(out));
}

}  // namespace enercast
