#pragma once

#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "enercast/error.hpp"
#include "enercast/text.hpp"

namespace enercast {

/// Aligned actual (y) and forecast (yhat) sequences.
class SeriesPair {
public:
    SeriesPair(std::vector<double> actual, std::vector<double> forecast)
        : actual_(std::move(actual)), forecast_(std::move(forecast)) {
        if (actual_.size() != forecast_.size())
            throw PairingError("actual has " + std::to_string(actual_.size()) +
                               " values, forecast has " + std::to_string(forecast_.size()));
        if (actual_.empty()) throw PairingError("series must not be empty");
    }

    std::span<const double> actual() const { return actual_; }
    std::span<const double> forecast() const { return forecast_; }
    std::size_t n() const { return actual_.size(); }

private:
    std::vector<double> actual_;
    std::vector<double> forecast_;
};

// Sums run left to right in long double.
namespace detail {

template <class Term>
long double sum_over(const SeriesPair& s, Term term) {
    long double acc = 0.0L;
    const auto y = s.actual();
    const auto yhat = s.forecast();
    for (std::size_t i = 0; i < s.n(); ++i)
        acc += term(static_cast<long double>(y[i]), static_cast<long double>(yhat[i]));
    return acc;
}

inline long double sum_squared_error(const SeriesPair& s) {
    return sum_over(s, [](long double y, long double f) { return (y - f) * (y - f); });
}

}  // namespace detail

/// (1/n) * sum (y - yhat)^2
inline double mse(const SeriesPair& s) {
    return static_cast<double>(detail::sum_squared_error(s) / static_cast<long double>(s.n()));
}

/// (1/n) * sqrt(sum (y - yhat)^2), with 1/n outside the root. This equals
/// sqrt(mse / n), not the usual sqrt(mse); see rmse_standard.
inline double rmse_paper(const SeriesPair& s) {
    return static_cast<double>(std::sqrt(detail::sum_squared_error(s)) /
                               static_cast<long double>(s.n()));
}

/// Conventional root mean squared error, sqrt(mse).
inline double rmse_standard(const SeriesPair& s) {
    return static_cast<double>(
        std::sqrt(detail::sum_squared_error(s) / static_cast<long double>(s.n())));
}

/// (1/n) * sum |y - yhat|
inline double mae(const SeriesPair& s) {
    const long double sum =
        detail::sum_over(s, [](long double y, long double f) { return std::fabs(y - f); });
    return static_cast<double>(sum / static_cast<long double>(s.n()));
}

/// (1/n) * sum |(y - yhat) / y| * 100, in percent. Refuses zero actuals.
inline double mape(const SeriesPair& s) {
    for (std::size_t i = 0; i < s.n(); ++i)
        if (s.actual()[i] == 0.0)
            throw DomainError("MAPE undefined: actual value at index " + std::to_string(i) +
                              " is zero");
    const long double sum = detail::sum_over(
        s, [](long double y, long double f) { return std::fabs((y - f) / y); });
    return static_cast<double>(sum / static_cast<long double>(s.n()) * 100.0L);
}

struct MetricsReport {
    double mse = 0.0;
    double rmse_paper = 0.0;
    double rmse_standard = 0.0;
    double mae = 0.0;
    double mape_pct = 0.0;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline MetricsReport compute_report(const SeriesPair& s) {
    return {mse(s), rmse_paper(s), rmse_standard(s), mae(s), mape(s)};
}

/// `metric,value` CSV with six decimals.
inline void write_report_csv(std::ostream& out, const MetricsReport& r) {
    out << "metric,value\n";
    out << "mse," << text::format_fixed(r.mse, 6) << '\n';
    out << "rmse_paper," << text::format_fixed(r.rmse_paper, 6) << '\n';
    out << "rmse_standard," << text::format_fixed(r.rmse_standard, 6) << '\n';
    out << "mae," << text::format_fixed(r.mae, 6) << '\n';
    out << "mape_pct," << text::format_fixed(r.mape_pct, 6) << '\n';
}

}  // namespace enercast
