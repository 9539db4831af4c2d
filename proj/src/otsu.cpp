#include "kinit/otsu.hpp"

#include "kinit/error.hpp"

#include <algorithm>
#include <cmath>

namespace kinit {

std::size_t Histogram::bin_of(double value) const noexcept {
    const auto last = counts.size() - 1;
    if (!(hi > lo) || value <= lo) return 0;
    const double scaled = static_cast<double>(counts.size()) * (value - lo) / (hi - lo);
    const auto b = static_cast<std::size_t>(std::floor(scaled));
    return std::min(b, last);
}

double Histogram::mean_bin() const noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += static_cast<double>(i * counts[i]);
    return total ? sum / static_cast<double>(total) : 0.0;
}

Histogram build_histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty()) throw DomainError("histogram of no values");
    if (bins < 2) throw DomainError("histogram needs at least 2 bins");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*hi > *lo)) throw DegenerateRange();

    Histogram h;
    h.counts.assign(bins, 0);
    h.lo = *lo;
    h.hi = *hi;
    h.total = values.size();
    for (double y : values) ++h.counts[h.bin_of(y)];
    return h;
}

namespace {

// Sum of i * n_i over all bins; exact for any realistic point count.
double total_moment(const Histogram& h) {
    double m = 0.0;
    for (std::size_t i = 0; i < h.bins(); ++i)
        m += static_cast<double>(i) * static_cast<double>(h.counts[i]);
    return m;
}

// sigma_B^2 from the integer class size and first moment of the lower class.
double sigma_b_at(const Histogram& h, std::uint64_t lower, double moment, double total) {
    if (lower == 0 || lower == h.total) return 0.0;
    const double n = static_cast<double>(h.total);
    const double p0 = static_cast<double>(lower) / n;
    const double p1 = static_cast<double>(h.total - lower) / n;
    const double num = (total / n) * p0 - moment / n;
    return num * num / (p0 * p1);
}

}  // namespace

double between_class_variance(const Histogram& h, std::size_t t) {
    if (h.bins() < 2 || t > h.bins() - 2)
        throw DomainError("threshold " + std::to_string(t) + " outside [0, L-2]");
    std::uint64_t lower = 0;
    double moment = 0.0;
    for (std::size_t i = 0; i <= t; ++i) {
        lower += h.counts[i];
        moment += static_cast<double>(i) * static_cast<double>(h.counts[i]);
    }
    return sigma_b_at(h, lower, moment, total_moment(h));
}

OtsuResult otsu_threshold(const Histogram& h) {
    const auto nonempty = std::count_if(h.counts.begin(), h.counts.end(),
                                        [](std::uint64_t c) { return c > 0; });
    if (nonempty < 2) throw DegenerateHistogram();

    const double total = total_moment(h);
    OtsuResult best;
    best.sigma_b = -1.0;
    std::uint64_t lower = 0;
    double moment = 0.0;
    for (std::size_t t = 0; t + 1 < h.bins(); ++t) {
        lower += h.counts[t];
        moment += static_cast<double>(t) * static_cast<double>(h.counts[t]);
        const double sigma = sigma_b_at(h, lower, moment, total);
        if (sigma > best.sigma_b) {
            best.sigma_b = sigma;
            best.threshold_bin = t;
        }
    }
    const double width = (h.hi - h.lo) / static_cast<double>(h.bins());
    best.cut_value = h.lo + static_cast<double>(best.threshold_bin + 1) * width;
    return best;
}

}  // namespace kinit
