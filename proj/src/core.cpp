#include "kinit/core.hpp"

#include "kinit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kinit {

CenterSet::CenterSet(std::size_t k, std::size_t d) : CenterSet(k, d, std::vector<double>(k * d)) {}

CenterSet::CenterSet(std::size_t k, std::size_t d, std::vector<double> values)
    : k_(k), d_(d), values_(std::move(values)) {
    if (k_ == 0 || d_ == 0) throw DimensionError("center set needs k >= 1 and d >= 1");
    if (values_.size() != k_ * d_) throw DimensionError("center value count does not match k*d");
}

bool CenterSet::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

CenterSet CenterSet::sorted() const {
    std::vector<std::size_t> order(k_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ca = center(a);
        auto cb = center(b);
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    });
    std::vector<double> out;
    out.reserve(values_.size());
    for (auto i : order) {
        auto c = center(i);
        out.insert(out.end(), c.begin(), c.end());
    }
    return CenterSet(k_, d_, std::move(out));
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        sum += diff * diff;
    }
    return sum;
}

namespace {

void require_same_dim(const Dataset& ds, const CenterSet& cs) {
    if (ds.d() != cs.d())
        throw DimensionError("dataset has d=" + std::to_string(ds.d()) + " but centers have d=" +
                             std::to_string(cs.d()));
}

}  // namespace

Assignment assign_nearest(const Dataset& ds, const CenterSet& cs) {
    require_same_dim(ds, cs);
    Assignment a;
    a.labels.resize(ds.n());
    a.counts.assign(cs.k(), 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const auto x = ds.row(i);
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cs.k(); ++c) {
            const double dist = squared_euclidean(x, cs.center(c));
            if (dist < best_dist) {
                best_dist = dist;
                best = c;
            }
        }
        a.labels[i] = best;
        ++a.counts[best];
    }
    return a;
}

CenterSet centroids(const Dataset& ds, const Assignment& a, std::size_t k,
                    const CenterSet& previous) {
    require_same_dim(ds, previous);
    if (previous.k() != k || a.counts.size() != k || a.labels.size() != ds.n())
        throw DimensionError("assignment is inconsistent with k or the dataset");
    const std::size_t d = ds.d();
    std::vector<double> sums(k * d, 0.0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        const auto x = ds.row(i);
        double* s = sums.data() + a.labels[i] * d;
        for (std::size_t j = 0; j < d; ++j) s[j] += x[j];
    }
    CenterSet out(k, d, std::move(sums));
    for (std::size_t c = 0; c < k; ++c) {
        auto center = out.center(c);
        if (a.counts[c] == 0) {
            auto prev = previous.center(c);
            std::copy(prev.begin(), prev.end(), center.begin());
        } else {
            const double count = static_cast<double>(a.counts[c]);
            for (double& v : center) v /= count;
        }
    }
    return out;
}

double sse(const Dataset& ds, const CenterSet& cs, const Assignment& a) {
    require_same_dim(ds, cs);
    if (a.labels.size() != ds.n()) throw DimensionError("assignment length does not match n");
    double total = 0.0;
    for (std::size_t i = 0; i < ds.n(); ++i)
        total += squared_euclidean(ds.row(i), cs.center(a.labels[i]));
    return total;
}

std::vector<double> mean_of(const Dataset& ds, std::span<const std::size_t> members) {
    if (members.empty()) throw DomainError("mean of an empty point set");
    std::vector<double> mean(ds.d(), 0.0);
    for (auto i : members) {
        const auto x = ds.row(i);
        for (std::size_t j = 0; j < ds.d(); ++j) mean[j] += x[j];
    }
    for (double& v : mean) v /= static_cast<double>(members.size());
    return mean;
}

std::vector<double> dataset_centroid(const Dataset& ds) {
    std::vector<std::size_t> all(ds.n());
    std::iota(all.begin(), all.end(), 0);
    return mean_of(ds, all);
}

BigInt stirling_second(unsigned n, unsigned k) {
    if (k < 1 || k > n)
        throw DomainError("Stirling number S(" + std::to_string(n) + "," + std::to_string(k) +
                          ") requires 1 <= k <= n");
    // row[j] holds S(m, j) for the current m.
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

}  // namespace kinit
