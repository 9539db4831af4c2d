#ifndef KINIT_LINALG_HPP
#define KINIT_LINALG_HPP

#include "kinit/dataset.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kinit {

/// Symmetric D x D matrix, row-major. Covariances use the 1/n convention.
class CovarianceMatrix {
public:
    CovarianceMatrix(std::size_t d, std::vector<double> values, std::size_t sample_count = 0);

    std::size_t d() const noexcept { return d_; }
    std::size_t sample_count() const noexcept { return sample_count_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return m_[i * d_ + j]; }
    std::span<const double> values() const noexcept { return m_; }

    std::vector<double> multiply(std::span<const double> v) const;
    bool is_zero() const noexcept;

private:
    std::size_t d_;
    std::vector<double> m_;
    std::size_t sample_count_;
};

CovarianceMatrix covariance(const Dataset& ds, std::span<const std::size_t> members);

/// Diagonal of covariance(ds, members) without forming the matrix.
std::vector<double> variance_per_axis(const Dataset& ds, std::span<const std::size_t> members);

struct PrincipalAxis {
    std::vector<double> direction;  // unit length, first nonzero component positive
    double eigenvalue = 0.0;        // Rayleigh quotient of `direction`
    int iterations = 0;
    bool converged = false;
};

/// Power iteration started from the coordinate axis with the largest diagonal
/// entry. Stops once ||Cv - lambda v|| <= tol * |lambda|; otherwise returns
/// the iterate with the largest Rayleigh quotient. Throws DegenerateCovariance
/// on a zero matrix.
PrincipalAxis principal_eigenvector(const CovarianceMatrix& c, double tol = 1e-10,
                                    int max_iter = 1000);

}  // namespace kinit

#endif  // KINIT_LINALG_HPP
