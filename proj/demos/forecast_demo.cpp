// Trains on 19 years of synthetic history, validates with chronological
// 10-fold cross validation and forecasts the following 12 months.

#include <iostream>

#include "enercast/enercast.hpp"

int main() {
    using namespace enercast;

    SyntheticOptions opt;
    opt.noise = 0.5;
    const Dataset all = generate_synthetic(252, 42, opt);
    const Dataset history({all.records().begin(), all.records().end() - 12});
    const Dataset future({all.records().end() - 12, all.records().end()});

    RunConfig cfg;
    const auto raw = raw_samples(history, cfg.lag);
    const auto cv = cross_validate(raw, cfg.k, cfg.seed_fold, FoldMode::chronological,
                                   cfg.network_config(), cfg.train_config());
    std::cout << "10-fold mean MAPE: " << cv.mean_report.mape_pct << "%\n";

    const ForecastModel model{cv.final_model, cv.final_normalization, cfg.lag};
    const ForecastTable table = with_actuals(recursive_forecast(model, history, future, 12), all);

    std::vector<double> actual, forecast;
    for (const auto& row : table.rows) {
        actual.push_back(*row.actual);
        forecast.push_back(row.forecast);
    }
    write_forecast_csv(std::cout, table);
    write_report_csv(std::cout, compute_report(SeriesPair(actual, forecast)));
}
