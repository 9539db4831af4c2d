#ifndef KINIT_OTSU_HPP
#define KINIT_OTSU_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kinit {

/// L-bin histogram of 1-D values. A value y lands in bin
/// floor(L (y - lo) / (hi - lo)), with the maximum clamped into bin L-1.
struct Histogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    double lo = 0.0;
    double hi = 0.0;

    std::size_t bins() const noexcept { return counts.size(); }
    std::size_t bin_of(double value) const noexcept;
    /// Mean bin index of the binned distribution.
    double mean_bin() const noexcept;
};

struct OtsuResult {
    std::size_t threshold_bin = 0;  // t*: bins <= t* form the lower class
    double sigma_b = 0.0;           // between-class variance at t*
    double cut_value = 0.0;         // upper edge of bin t*, in value units
};

Histogram build_histogram(std::span<const double> values, std::size_t bins);

/// [mu_T p0(t) - mu(t)]^2 / (p0(t) p1(t)); zero when either class is empty.
double between_class_variance(const Histogram& h, std::size_t t);

/// Single pass over t in [0, L-2] maximizing between-class variance; ties go to
/// the lowest t.
OtsuResult otsu_threshold(const Histogram& h);

}  // namespace kinit

#endif  // KINIT_OTSU_HPP
