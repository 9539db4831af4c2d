#ifndef KINIT_CORE_HPP
#define KINIT_CORE_HPP

#include "kinit/dataset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace kinit {

/// K centers in R^D, row-major.
class CenterSet {
public:
    CenterSet(std::size_t k, std::size_t d);
    CenterSet(std::size_t k, std::size_t d, std::vector<double> values);

    std::size_t k() const noexcept { return k_; }
    std::size_t d() const noexcept { return d_; }

    std::span<const double> center(std::size_t i) const noexcept {
        return {values_.data() + i * d_, d_};
    }
    std::span<double> center(std::size_t i) noexcept { return {values_.data() + i * d_, d_}; }
    std::span<const double> values() const noexcept { return values_; }

    bool all_finite() const noexcept;

    /// Centers sorted lexicographically; used to compare sets irrespective of order.
    CenterSet sorted() const;

    friend bool operator==(const CenterSet&, const CenterSet&) = default;

private:
    std::size_t k_;
    std::size_t d_;
    std::vector<double> values_;
};

struct Assignment {
    std::vector<std::size_t> labels;
    std::vector<std::size_t> counts;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

double squared_euclidean(std::span<const double> a, std::span<const double> b);

/// Nearest center for every point; distance ties go to the lowest center index.
Assignment assign_nearest(const Dataset& ds, const CenterSet& cs);

/// Cluster means. A center whose cluster is empty is copied from `previous`.
CenterSet centroids(const Dataset& ds, const Assignment& a, std::size_t k,
                    const CenterSet& previous);

/// Sum of squared distances from each point to its assigned center,
/// accumulated in point order.
double sse(const Dataset& ds, const CenterSet& cs, const Assignment& a);

/// Mean of the rows listed in `members`; throws DomainError when empty.
std::vector<double> mean_of(const Dataset& ds, std::span<const std::size_t> members);

/// Centroid of the whole dataset.
std::vector<double> dataset_centroid(const Dataset& ds);

using BigInt = boost::multiprecision::cpp_int;

/// Stirling number of the second kind, exact.
BigInt stirling_second(unsigned n, unsigned k);

}  // namespace kinit

#endif  // KINIT_CORE_HPP
