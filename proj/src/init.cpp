#include "kinit/init.hpp"

#include "kinit/error.hpp"
#include "kinit/linalg.hpp"
#include "kinit/otsu.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace kinit {

std::string_view to_string(InitMethod m) noexcept {
    switch (m) {
        case InitMethod::F: return "F";
        case InitMethod::M: return "M";
        case InitMethod::K: return "K";
        case InitMethod::X: return "X";
        case InitMethod::V: return "V";
        case InitMethod::P: return "P";
        case InitMethod::OV: return "OV";
        case InitMethod::OP: return "OP";
    }
    return "?";
}

InitMethod parse_method(std::string_view id) {
    for (auto m : kAllMethods)
        if (to_string(m) == id) return m;
    throw DomainError("unknown method '" + std::string(id) + "' (expected F, M, K, X, V, P, OV, OP)");
}

std::vector<InitMethod> parse_method_list(std::string_view csv) {
    if (csv == "all") return {kAllMethods.begin(), kAllMethods.end()};
    std::vector<InitMethod> out;
    std::istringstream in{std::string(csv)};
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(parse_method(item));
    if (out.empty()) throw DomainError("empty method list");
    return out;
}

namespace {

void require_k(const Dataset& ds, std::size_t k) {
    if (k == 0) throw DomainError("k must be at least 1");
    if (k > ds.n()) throw TooManyClusters(k, ds.n());
}

CenterSet from_points(const Dataset& ds, std::span<const std::size_t> indices) {
    std::vector<double> values;
    values.reserve(indices.size() * ds.d());
    for (auto i : indices) {
        auto r = ds.row(i);
        values.insert(values.end(), r.begin(), r.end());
    }
    return CenterSet(indices.size(), ds.d(), std::move(values));
}

}  // namespace

CenterSet forgy(const Dataset& ds, std::size_t k, SeededRng& rng) {
    require_k(ds, k);
    Assignment a;
    a.labels.resize(ds.n());
    a.counts.assign(k, 0);
    for (std::size_t i = 0; i < ds.n(); ++i) {
        a.labels[i] = rng.uniform_index(k);
        ++a.counts[a.labels[i]];
    }
    CenterSet cs = centroids(ds, a, k, CenterSet(k, ds.d()));
    for (std::size_t c = 0; c < k; ++c) {
        if (a.counts[c] != 0) continue;
        auto point = ds.row(rng.uniform_index(ds.n()));
        std::copy(point.begin(), point.end(), cs.center(c).begin());
    }
    return cs;
}

CenterSet macqueen_random(const Dataset& ds, std::size_t k, SeededRng& rng) {
    require_k(ds, k);
    // Partial Fisher-Yates over the index range.
    std::vector<std::size_t> idx(ds.n());
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_index(ds.n() - i);
        std::swap(idx[i], idx[j]);
    }
    return from_points(ds, std::span(idx).first(k));
}

CenterSet kmeanspp(const Dataset& ds, std::size_t k, SeededRng& rng) {
    require_k(ds, k);
    return kmeanspp_from(ds, k, rng, rng.uniform_index(ds.n()));
}

CenterSet kmeanspp_from(const Dataset& ds, std::size_t k, SeededRng& rng, std::size_t first) {
    require_k(ds, k);
    if (first >= ds.n()) throw DomainError("first center index out of range");
    const std::size_t n = ds.n();
    std::vector<std::size_t> chosen{first};
    std::vector<bool> taken(n, false);
    taken[first] = true;

    std::vector<double> md(n);
    for (std::size_t i = 0; i < n; ++i) md[i] = squared_euclidean(ds.row(i), ds.row(first));

    while (chosen.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += md[i];

        std::size_t pick = n;
        if (total > 0.0) {
            const double r = rng.uniform01() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (md[i] <= 0.0) continue;
                acc += md[i];
                pick = i;
                if (acc > r) break;
            }
        } else {
            // Fewer distinct points than k: uniform over what is left.
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i)
                if (!taken[i]) rest.push_back(i);
            pick = rest[rng.uniform_index(rest.size())];
        }

        chosen.push_back(pick);
        taken[pick] = true;
        const auto c = ds.row(pick);
        for (std::size_t i = 0; i < n; ++i) md[i] = std::min(md[i], squared_euclidean(ds.row(i), c));
    }
    return from_points(ds, chosen);
}

CenterSet maximin(const Dataset& ds, std::size_t k) {
    require_k(ds, k);
    const std::size_t n = ds.n();
    const std::size_t d = ds.d();
    std::vector<double> values = dataset_centroid(ds);
    values.reserve(k * d);

    std::vector<double> md(n);
    for (std::size_t i = 0; i < n; ++i)
        md[i] = squared_euclidean(ds.row(i), std::span<const double>(values.data(), d));

    for (std::size_t c = 1; c < k; ++c) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (md[i] > md[best]) best = i;
        const auto p = ds.row(best);
        values.insert(values.end(), p.begin(), p.end());
        for (std::size_t i = 0; i < n; ++i) md[i] = std::min(md[i], squared_euclidean(ds.row(i), p));
    }
    return CenterSet(k, d, std::move(values));
}

ClusterNode make_node(const Dataset& ds, std::vector<std::size_t> members, std::size_t order) {
    ClusterNode node;
    node.centroid = mean_of(ds, members);
    for (auto i : members) node.sse += squared_euclidean(ds.row(i), node.centroid);
    node.members = std::move(members);
    node.order = order;
    return node;
}

namespace {

struct Projection {
    AxisRule rule = AxisRule::variance;
    std::size_t axis = 0;
    std::vector<double> direction;
    std::vector<double> values;
};

Projection variance_projection(const Dataset& ds, const ClusterNode& node) {
    const auto var = variance_per_axis(ds, node.members);
    Projection p;
    p.rule = AxisRule::variance;
    for (std::size_t j = 1; j < var.size(); ++j)
        if (var[j] > var[p.axis]) p.axis = j;
    if (!(var[p.axis] > 0.0)) throw DegenerateRange();
    p.direction.assign(ds.d(), 0.0);
    p.direction[p.axis] = 1.0;
    p.values.reserve(node.members.size());
    for (auto i : node.members) p.values.push_back(ds(i, p.axis));
    return p;
}

Projection pca_projection(const Dataset& ds, const ClusterNode& node, const InitOptions& opts) {
    const auto cov = covariance(ds, node.members);
    if (cov.is_zero()) return variance_projection(ds, node);
    const auto axis = principal_eigenvector(cov, opts.eigen_tol, opts.eigen_max_iter);
    Projection p;
    p.rule = AxisRule::pca;
    p.direction = axis.direction;
    p.values.reserve(node.members.size());
    for (auto i : node.members) {
        const auto x = ds.row(i);
        double y = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) y += p.direction[j] * x[j];
        p.values.push_back(y);
    }
    return p;
}

}  // namespace

std::pair<ClusterNode, ClusterNode> split_node(const Dataset& ds, const ClusterNode& node,
                                               AxisRule axis_rule, SplitRule split_rule,
                                               const InitOptions& opts,
                                               std::size_t first_child_order,
                                               SplitRecord* record) {
    if (node.members.size() < 2) throw DegenerateRange();
    const Projection proj = axis_rule == AxisRule::pca ? pca_projection(ds, node, opts)
                                                       : variance_projection(ds, node);
    const auto& y = proj.values;
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (!(*hi > *lo)) throw DegenerateRange();
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());

    std::optional<Histogram> hist;
    if (split_rule == SplitRule::otsu || record) hist = build_histogram(y, opts.bins);

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    double threshold = mean;
    std::optional<std::size_t> otsu_bin;
    if (split_rule == SplitRule::mean) {
        for (std::size_t m = 0; m < y.size(); ++m)
            (y[m] < mean ? left : right).push_back(node.members[m]);
    } else {
        const auto otsu = otsu_threshold(*hist);
        otsu_bin = otsu.threshold_bin;
        threshold = otsu.cut_value;
        for (std::size_t m = 0; m < y.size(); ++m)
            (hist->bin_of(y[m]) <= otsu.threshold_bin ? left : right).push_back(node.members[m]);
    }
    if (left.empty() || right.empty()) throw DegenerateRange();

    auto l = make_node(ds, std::move(left), first_child_order);
    auto r = make_node(ds, std::move(right), first_child_order + 1);

    if (record) {
        record->node_order = node.order;
        record->node_size = node.members.size();
        record->parent_sse = node.sse;
        record->axis_rule = proj.rule;
        record->axis = proj.axis;
        record->direction = proj.direction;
        record->split_rule = split_rule;
        record->mean_projection = mean;
        record->threshold = threshold;
        record->mean_bin = hist->bin_of(mean);
        record->histogram_mean_bin = hist->mean_bin();
        if (!otsu_bin && hist->counts.size() >= 2) {
            try {
                otsu_bin = otsu_threshold(*hist).threshold_bin;
            } catch (const DegenerateHistogram&) {
            }
        }
        record->otsu_bin = otsu_bin;
        record->left_size = l.members.size();
        record->right_size = r.members.size();
        record->left_sse = l.sse;
        record->right_sse = r.sse;
    }
    return {std::move(l), std::move(r)};
}

HierarchicalResult hierarchical_init(const Dataset& ds, std::size_t k, AxisRule axis_rule,
                                     SplitRule split_rule, const InitOptions& opts) {
    require_k(ds, k);
    if (split_rule == SplitRule::otsu && opts.bins < 2)
        throw DomainError("Otsu splitting needs at least 2 histogram bins");

    std::vector<std::size_t> all(ds.n());
    std::iota(all.begin(), all.end(), 0);
    std::vector<ClusterNode> leaves;
    leaves.push_back(make_node(ds, std::move(all), 0));
    std::vector<bool> stuck{false};
    std::size_t next_order = 1;
    std::vector<SplitRecord> splits;

    while (leaves.size() < k) {
        // Leaves are kept in creation order, so a strict '>' keeps the oldest on ties.
        bool split_done = false;
        std::vector<bool> tried(leaves.size(), false);
        while (!split_done) {
            std::size_t pick = leaves.size();
            for (std::size_t i = 0; i < leaves.size(); ++i) {
                if (stuck[i] || tried[i]) continue;
                if (pick == leaves.size() || leaves[i].sse > leaves[pick].sse) pick = i;
            }
            if (pick == leaves.size()) throw UnsplittableData(leaves.size());
            tried[pick] = true;

            SplitRecord rec;
            try {
                auto [l, r] = split_node(ds, leaves[pick], axis_rule, split_rule, opts, next_order,
                                         opts.record_splits ? &rec : nullptr);
                next_order += 2;
                leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
                stuck.erase(stuck.begin() + static_cast<std::ptrdiff_t>(pick));
                leaves.push_back(std::move(l));
                leaves.push_back(std::move(r));
                stuck.push_back(false);
                stuck.push_back(false);
                if (opts.record_splits) splits.push_back(std::move(rec));
                split_done = true;
            } catch (const DegenerateRange&) {
                stuck[pick] = true;
            }
        }
    }

    std::vector<double> values;
    values.reserve(k * ds.d());
    for (const auto& leaf : leaves) values.insert(values.end(), leaf.centroid.begin(), leaf.centroid.end());
    return HierarchicalResult{CenterSet(k, ds.d(), std::move(values)), std::move(leaves),
                              std::move(splits)};
}

CenterSet initialize(const Dataset& ds, InitMethod method, std::size_t k, SeededRng& rng,
                     const InitOptions& opts) {
    switch (method) {
        case InitMethod::F: return forgy(ds, k, rng);
        case InitMethod::M: return macqueen_random(ds, k, rng);
        case InitMethod::K: return kmeanspp(ds, k, rng);
        case InitMethod::X: return maximin(ds, k);
        case InitMethod::V: return hierarchical_init(ds, k, AxisRule::variance, SplitRule::mean, opts).centers;
        case InitMethod::P: return hierarchical_init(ds, k, AxisRule::pca, SplitRule::mean, opts).centers;
        case InitMethod::OV: return hierarchical_init(ds, k, AxisRule::variance, SplitRule::otsu, opts).centers;
        case InitMethod::OP: return hierarchical_init(ds, k, AxisRule::pca, SplitRule::otsu, opts).centers;
    }
    throw DomainError("unknown method");
}

}  // namespace kinit
