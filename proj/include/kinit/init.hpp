#ifndef KINIT_INIT_HPP
#define KINIT_INIT_HPP

#include "kinit/core.hpp"
#include "kinit/dataset.hpp"
#include "kinit/rng.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kinit {

/// Initialization methods by their short table labels.
enum class InitMethod { F, M, K, X, V, P, OV, OP };

inline constexpr std::array<InitMethod, 8> kAllMethods = {
    InitMethod::F, InitMethod::M, InitMethod::K, InitMethod::X,
    InitMethod::V, InitMethod::P, InitMethod::OV, InitMethod::OP};

std::string_view to_string(InitMethod m) noexcept;
InitMethod parse_method(std::string_view id);
std::vector<InitMethod> parse_method_list(std::string_view csv);

/// F, M and K draw random numbers; the rest are deterministic.
constexpr bool is_random(InitMethod m) noexcept {
    return m == InitMethod::F || m == InitMethod::M || m == InitMethod::K;
}

enum class AxisRule { variance, pca };
enum class SplitRule { mean, otsu };

struct InitOptions {
    std::size_t bins = 256;
    double eigen_tol = 1e-10;
    int eigen_max_iter = 1000;
    bool record_splits = false;  // fill HierarchicalResult::splits
};

// Random methods.
CenterSet forgy(const Dataset& ds, std::size_t k, SeededRng& rng);
CenterSet macqueen_random(const Dataset& ds, std::size_t k, SeededRng& rng);
CenterSet kmeanspp(const Dataset& ds, std::size_t k, SeededRng& rng);
/// k-means++ with the first center fixed to point `first`.
CenterSet kmeanspp_from(const Dataset& ds, std::size_t k, SeededRng& rng, std::size_t first);

/// First center is the dataset centroid; each next center is the point with
/// the greatest minimum distance to those already chosen (lowest index on ties).
CenterSet maximin(const Dataset& ds, std::size_t k);

/// A cluster in the divisive hierarchy. `order` is its creation index.
struct ClusterNode {
    std::vector<std::size_t> members;
    std::vector<double> centroid;
    double sse = 0.0;
    std::size_t order = 0;
};

ClusterNode make_node(const Dataset& ds, std::vector<std::size_t> members, std::size_t order);

/// What happened at one split; filled in when a trace is requested.
struct SplitRecord {
    std::size_t node_order = 0;
    std::size_t node_size = 0;
    double parent_sse = 0.0;
    AxisRule axis_rule = AxisRule::variance;  // rule actually used (PCA may fall back)
    std::size_t axis = 0;                     // coordinate axis for the variance rule
    std::vector<double> direction;            // unit projection direction
    SplitRule split_rule = SplitRule::mean;
    double mean_projection = 0.0;
    double threshold = 0.0;  // projection value separating the children
    // Histogram view of the same projections (always L bins).
    std::size_t mean_bin = 0;          // bin holding the mean projection
    double histogram_mean_bin = 0.0;   // mean bin index of the binned distribution
    std::optional<std::size_t> otsu_bin;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    double left_sse = 0.0;
    double right_sse = 0.0;
};

/// Splits a node in two. Mean rule: projection < mean goes left. Otsu rule:
/// histogram bin <= t* goes left. Throws DegenerateRange when the node
/// cannot be split along the chosen direction.
std::pair<ClusterNode, ClusterNode> split_node(const Dataset& ds, const ClusterNode& node,
                                               AxisRule axis_rule, SplitRule split_rule,
                                               const InitOptions& opts = {},
                                               std::size_t first_child_order = 0,
                                               SplitRecord* record = nullptr);

struct HierarchicalResult {
    CenterSet centers;
    std::vector<ClusterNode> leaves;
    std::vector<SplitRecord> splits;
};

/// Divisive initializer: repeatedly splits the leaf with the greatest SSE
/// (oldest first on ties) until k leaves exist. Covers V, P, OV and OP.
HierarchicalResult hierarchical_init(const Dataset& ds, std::size_t k, AxisRule axis_rule,
                                     SplitRule split_rule, const InitOptions& opts = {});

/// Dispatches on method. `rng` is only consulted by random methods.
CenterSet initialize(const Dataset& ds, InitMethod method, std::size_t k, SeededRng& rng,
                     const InitOptions& opts = {});

}  // namespace kinit

#endif  // KINIT_INIT_HPP
