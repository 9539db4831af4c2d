#ifndef KINIT_LLOYD_HPP
#define KINIT_LLOYD_HPP

#include "kinit/core.hpp"
#include "kinit/dataset.hpp"

#include <vector>

namespace kinit {

struct KMeansConfig {
    int max_iters = 100;
    double epsilon = 1e-6;
};

struct KMeansResult {
    CenterSet centers;
    Assignment assignment;
    double initial_sse = 0.0;
    double final_sse = 0.0;
    int iterations = 0;
    std::vector<double> sse_trace;  // SSE after each iteration's centroid update
};

/// Batch k-means. One iteration is an assignment pass followed by a centroid
/// update; SSE_i is measured on the updated centers against that assignment.
/// Stops after max_iters or once (SSE_{i-1} - SSE_i) / SSE_i <= epsilon, where
/// SSE_0 is the SSE of `init` under nearest-center assignment.
KMeansResult run_kmeans(const Dataset& ds, const CenterSet& init, const KMeansConfig& cfg = {});

}  // namespace kinit

#endif  // KINIT_LLOYD_HPP
