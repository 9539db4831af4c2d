#include "kinit/lloyd.hpp"

#include "kinit/error.hpp"

namespace kinit {

KMeansResult run_kmeans(const Dataset& ds, const CenterSet& init, const KMeansConfig& cfg) {
    if (init.d() != ds.d()) throw DimensionError("initial centers do not match dataset dimension");
    if (init.k() > ds.n()) throw TooManyClusters(init.k(), ds.n());
    if (cfg.max_iters < 1 || cfg.epsilon < 0.0) throw DomainError("invalid k-means configuration");

    CenterSet centers = init;
    Assignment assignment = assign_nearest(ds, centers);
    const double initial = sse(ds, centers, assignment);

    KMeansResult result{centers, assignment, initial, initial, 0, {}};
    double previous = initial;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        if (it > 1) assignment = assign_nearest(ds, centers);
        centers = centroids(ds, assignment, centers.k(), centers);
        const double current = sse(ds, centers, assignment);
        result.sse_trace.push_back(current);
        result.iterations = it;
        if (current == 0.0 || (previous - current) / current <= cfg.epsilon) break;
        previous = current;
    }
    result.final_sse = result.sse_trace.back();
    result.centers = std::move(centers);
    result.assignment = std::move(assignment);
    return result;
}

}  // namespace kinit
