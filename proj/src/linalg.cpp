#include "kinit/linalg.hpp"

#include "kinit/core.hpp"
#include "kinit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kinit {

CovarianceMatrix::CovarianceMatrix(std::size_t d, std::vector<double> values,
                                   std::size_t sample_count)
    : d_(d), m_(std::move(values)), sample_count_(sample_count) {
    if (d_ == 0 || m_.size() != d_ * d_) throw DimensionError("covariance must be d x d with d >= 1");
}

std::vector<double> CovarianceMatrix::multiply(std::span<const double> v) const {
    if (v.size() != d_) throw DimensionError("vector length does not match matrix");
    std::vector<double> out(d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d_; ++j) s += m_[i * d_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

bool CovarianceMatrix::is_zero() const noexcept {
    return std::all_of(m_.begin(), m_.end(), [](double x) { return x == 0.0; });
}

CovarianceMatrix covariance(const Dataset& ds, std::span<const std::size_t> members) {
    const std::size_t d = ds.d();
    const auto mean = mean_of(ds, members);
    std::vector<double> m(d * d, 0.0);
    std::vector<double> centered(d);
    for (auto i : members) {
        const auto x = ds.row(i);
        for (std::size_t j = 0; j < d; ++j) centered[j] = x[j] - mean[j];
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = j; l < d; ++l) m[j * d + l] += centered[j] * centered[l];
    }
    const double n = static_cast<double>(members.size());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = j; l < d; ++l) {
            m[j * d + l] /= n;
            m[l * d + j] = m[j * d + l];
        }
    }
    return CovarianceMatrix(d, std::move(m), members.size());
}

std::vector<double> variance_per_axis(const Dataset& ds, std::span<const std::size_t> members) {
    const auto mean = mean_of(ds, members);
    std::vector<double> var(ds.d(), 0.0);
    for (auto i : members) {
        const auto x = ds.row(i);
        for (std::size_t j = 0; j < ds.d(); ++j) {
            const double c = x[j] - mean[j];
            var[j] += c * c;
        }
    }
    for (double& v : var) v /= static_cast<double>(members.size());
    return var;
}

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void fix_sign(std::vector<double>& v) {
    for (double x : v) {
        if (x == 0.0) continue;
        if (x < 0.0)
            for (double& y : v) y = -y;
        return;
    }
}

}  // namespace

PrincipalAxis principal_eigenvector(const CovarianceMatrix& c, double tol, int max_iter) {
    if (c.is_zero()) throw DegenerateCovariance();
    const std::size_t d = c.d();

    std::size_t start = 0;
    for (std::size_t j = 1; j < d; ++j)
        if (c(j, j) > c(start, start)) start = j;

    std::vector<double> v(d, 0.0);
    v[start] = 1.0;
    if (c(start, start) <= 0.0) {
        // Zero diagonal with nonzero off-diagonal entries (not a covariance, but
        // still symmetric): fall back to a uniform start.
        std::fill(v.begin(), v.end(), 1.0 / std::sqrt(static_cast<double>(d)));
    }

    PrincipalAxis best;
    best.eigenvalue = -std::numeric_limits<double>::infinity();
    std::vector<double> residual(d);
    for (int it = 1; it <= std::max(max_iter, 1); ++it) {
        auto w = c.multiply(v);
        const double len = norm(w);
        if (len == 0.0) break;
        for (double& x : w) x /= len;
        v = std::move(w);

        const auto cv = c.multiply(v);
        const double lambda = dot(v, cv);
        for (std::size_t j = 0; j < d; ++j) residual[j] = cv[j] - lambda * v[j];
        const bool done = norm(residual) <= tol * std::abs(lambda);

        if (lambda > best.eigenvalue || done) {
            best.direction = v;
            best.eigenvalue = lambda;
            best.iterations = it;
            best.converged = done;
        }
        if (done) break;
    }
    if (best.direction.empty()) throw DegenerateCovariance();
    fix_sign(best.direction);
    return best;
}

}  // namespace kinit
