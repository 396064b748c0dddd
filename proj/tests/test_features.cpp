#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "enercast/features.hpp"

using namespace enercast;

TEST(FitRanges, Extrema) {
    const std::vector<std::vector<double>> rows{{0}, {5}, {10}};
    const auto r = fit_ranges(rows);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0], (FeatureRange{0, 10}));
}

TEST(FitRanges, ConstantColumnWidenedByOne) {
    const std::vector<std::vector<double>> rows{{7}, {7}, {7}};
    EXPECT_EQ(fit_ranges(rows)[0], (FeatureRange{7, 8}));
}

TEST(FitRanges, ColumnsAreIndependent) {
    // Columns [0, 10] and [1, 3].
    const std::vector<std::vector<double>> rows{{0, 1}, {10, 3}};
    const auto r = fit_ranges(rows);
    EXPECT_EQ(r[0], (FeatureRange{0, 10}));
    EXPECT_EQ(r[1], (FeatureRange{1, 3}));
}

TEST(FitRanges, EmptySubsetIsError) {
    EXPECT_THROW(fit_ranges({}), FitError);
    EXPECT_THROW(fit_normalizer({}), FitError);
}

TEST(Normalize, Examples) {
    const FeatureRange r{0, 10};
    EXPECT_EQ(normalize(5, r), 0.5);
    EXPECT_EQ(normalize(0, r), 0.0);
    EXPECT_EQ(normalize(10, r), 1.0);
}

TEST(Normalize, RoundTripOnPublishedRange) {
    const FeatureRange r{74.98, 113.58};
    const double back = denormalize(normalize(87.11, r), r);
    EXPECT_LE(std::abs(back - 87.11) / 87.11, 1e-12);
}

TEST(Normalize, MonotoneAndInvertibleProperty) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    std::uniform_real_distribution<double> width(1e-3, 1e4);
    for (int i = 0; i < 2000; ++i) {
        const double lo = u(gen);
        const FeatureRange r{lo, lo + width(gen)};
        const double a = u(gen), b = u(gen);
        if (a < b) {
            EXPECT_LT(normalize(a, r), normalize(b, r));
        }
        const double back = denormalize(normalize(a, r), r);
        EXPECT_LE(std::abs(back - a), 1e-12 * std::max(std::abs(a), 1e-300) + 1e-12 * std::abs(lo))
            << a << " in [" << r.min << "," << r.max << "]";
    }
}

TEST(Featurize, SampleCounts) {
    const auto d13 = generate_synthetic(24, 1);
    const Dataset first13({d13.records().begin(), d13.records().begin() + 13});
    const auto raw13 = raw_samples(first13, 12);
    ASSERT_EQ(raw13.size(), 1u);
    EXPECT_EQ(raw13[0].target, first13[12].consumption);
    EXPECT_EQ(raw13[0].when, first13[12].when());

    const auto p = fit_normalizer(raw13);
    const auto s = featurize(first13, 12, p);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].target, normalize(first13[12].consumption, p.target));

    EXPECT_EQ(raw_samples(generate_synthetic(24, 1), 12).size(), 12u);
}

TEST(Featurize, CountPropertyForEveryLag) {
    const auto d = generate_synthetic(40, 3);
    for (std::size_t lag = 1; lag < d.size(); ++lag) {
        const auto raw = raw_samples(d, lag);
        ASSERT_EQ(raw.size(), d.size() - lag);
        for (const auto& s : raw) ASSERT_EQ(s.features.size(), feature_count(lag));
    }
}

TEST(Featurize, LayoutOfFeatures) {
    const auto d = generate_synthetic(30, 4);
    const std::size_t lag = 12;
    const auto raw = raw_samples(d, lag);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::size_t t = i + lag;
        for (std::size_t j = 0; j < lag; ++j)
            EXPECT_EQ(raw[i].features[j], d[t - lag + j].consumption);
        EXPECT_EQ(raw[i].features[lag + 2], d[t].temperature);
        EXPECT_EQ(raw[i].features[lag + 3], d[t].humidity);
        EXPECT_EQ(raw[i].features[lag + 4], d[t].population);
        EXPECT_EQ(raw[i].features[lag + 5], d[t].gdp_per_capita);
    }
}

TEST(Featurize, CalendarEncoding) {
    MonthlyRecord march{2000, 3, 1, 1, 1, 1, 1};
    const double lags[] = {1.0};
    const auto f = raw_features(lags, march);
    EXPECT_NEAR(f[1], 1.0, 1e-15);
    EXPECT_NEAR(f[2], 0.0, 1e-15);
}

TEST(Featurize, TooShortIsError) {
    const auto d = generate_synthetic(24, 1);
    EXPECT_THROW(raw_samples(d, 24), FeaturizeError);
    EXPECT_THROW(raw_samples(d, 30), FeaturizeError);
    EXPECT_THROW(raw_samples(d, 0), FeaturizeError);
}

TEST(Featurize, TrainingSamplesNormalizeIntoUnitInterval) {
    const auto raw = raw_samples(generate_synthetic(120, 8), 12);
    const std::span<const Sample> training(raw.data(), 80);
    const auto p = fit_normalizer(training);
    for (const auto& s : normalize_samples(training, p)) {
        for (double v : s.features) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
        EXPECT_GE(s.target, 0.0);
        EXPECT_LE(s.target, 1.0);
    }
}

TEST(Featurize, NormalizerShapeMismatch) {
    const auto raw = raw_samples(generate_synthetic(30, 8), 12);
    const auto p = fit_normalizer(raw);
    const std::vector<double> wrong(5, 0.0);
    EXPECT_THROW(normalize_features(wrong, p), ShapeError);
}

TEST(LeakageGuard, ExcludedSamplesDoNotMoveParams) {
    auto raw = raw_samples(generate_synthetic(96, 2), 12);
    const std::size_t cut = 50;
    const auto before = fit_normalizer(std::span<const Sample>(raw.data(), cut));
    std::mt19937_64 gen(5);
    std::normal_distribution<double> big(0.0, 1e6);
    for (std::size_t i = cut; i < raw.size(); ++i) {
        for (auto& v : raw[i].features) v += big(gen);
        raw[i].target += big(gen);
    }
    EXPECT_EQ(fit_normalizer(std::span<const Sample>(raw.data(), cut)), before);
}
