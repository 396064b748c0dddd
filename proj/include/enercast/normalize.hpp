#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "enercast/error.hpp"

namespace enercast {

/// Min-max scaling range of one column. Always max > min once fitted.
struct FeatureRange {
    double min = 0.0;
    double max = 1.0;

    friend bool operator==(const FeatureRange&, const FeatureRange&) = default;
};

inline double normalize(double x, const FeatureRange& r) { return (x - r.min) / (r.max - r.min); }

inline double denormalize(double z, const FeatureRange& r) { return r.min + z * (r.max - r.min); }

/// Per-column extrema of `rows`. A constant column c gets (c, c + 1).
inline std::vector<FeatureRange> fit_ranges(std::span<const std::vector<double>> rows) {
    if (rows.empty()) throw FitError("cannot fit normalizer on an empty subset");
    const std::size_t width = rows.front().size();
    std::vector<FeatureRange> out(width);
    for (std::size_t c = 0; c < width; ++c) out[c] = {rows.front()[c], rows.front()[c]};
    for (const auto& row : rows) {
        if (row.size() != width) throw ShapeError("ragged rows passed to fit_ranges");
        for (std::size_t c = 0; c < width; ++c) {
            out[c].min = std::min(out[c].min, row[c]);
            out[c].max = std::max(out[c].max, row[c]);
        }
    }
    for (auto& r : out)
        if (!(r.max > r.min)) r.max = r.min + 1.0;
    return out;
}

}  // namespace enercast
